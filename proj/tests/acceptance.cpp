// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sytbij/array_pair.hpp"
#include "sytbij/hook_bijection.hpp"
#include "sytbij/json_io.hpp"
#include "sytbij/partition.hpp"
#include "sytbij/tableau.hpp"
#include "sytbij/two_row.hpp"
#include "sytbij/verify.hpp"

using namespace sytbij;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_ms,
               const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && ms >= budget_ms) {
        ok = false;
        note = "budget " + std::to_string(budget_ms) + " ms exceeded";
    }
    std::printf("%s  %d. %s (%.2f ms)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(), ms,
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++failures;
}

bool worked_example_fidelity(std::string& note) {
    const ArrayPair input = array_pair({2, 4, 8, 9, 10}, {1, 3, 5, 6, 7});

    const HookTableauPair pair = to_hook_pair(input);
    if (!(pair.first == Tableau{{{1, 3, 5}, {2}, {4}, {6}}}) ||
        !(pair.second == Tableau{{{1, 2, 3}, {4}, {5}, {6}}})) {
        note = "hook pair differs from the published example";
        return false;
    }

    BijectionTrace trace;
    const Tableau result = to_two_row_syt(input, &trace);
    const std::vector<TwoRowState> expected_states{
        {{2, 4, 8, 9, 10}, {1, 3, 5, 6, 7}},
        {{1, 2, 4, 8, 9, 10}, {3, 5, 6, 7}},
        {{3, 5, 6, 7, 8, 9, 10}, {1, 2, 4}},
        {{1, 3, 5, 6, 7, 8, 9, 10}, {2, 4}}};
    if (trace.steps() != 3 || trace.pivots != std::vector<int>{1, 4, 1} ||
        trace.states != expected_states) {
        note = "two-row trace differs from the published chain";
        return false;
    }
    if (!(result == Tableau{{{1, 3, 5, 6, 7, 8, 9, 10}, {2, 4}}}) ||
        !(result.shape() == partition_of({8, 2}))) {
        note = "final tableau differs from the published example";
        return false;
    }
    return true;
}

bool identity_at_desk_scale(std::string& note) {
    for (int n = 1; n <= 8; ++n) {
        const auto [lhs, rhs] = identity_sides(n);
        const std::uint64_t central = binomial(2 * n, n);
        if (lhs != rhs || lhs != central) {
            note = "n=" + std::to_string(n) + ": lhs=" + std::to_string(lhs) +
                   " rhs=" + std::to_string(rhs) + " C=" + std::to_string(central);
            return false;
        }
    }
    if (identity_sides(5).first != 252 || identity_sides(8).first != 12870) {
        note = "spot values 252 / 12870 missed";
        return false;
    }
    return true;
}

bool exhaustive_bijectivity(std::string& note) {
    for (int n = 1; n <= 8; ++n) {
        const IdentityReport report = certify(n);
        if (!report.bijection1_ok || !report.bijection2_ok || report.lhs != report.rhs ||
            report.lhs != report.array_count) {
            note = "n=" + std::to_string(n) + " failed";
            if (report.failure)
                note += ": " + report.failure->check + " (" + report.failure->detail + ")";
            return false;
        }
    }
    return true;
}

bool counting_oracle_equivalence(std::string& note) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& shape : partitions_of(n)) {
            const auto enumerated = enumerate_syt(shape);
            if (count_syt(shape) != enumerated.size()) {
                note = "mismatch at a shape of weight " + std::to_string(n);
                return false;
            }
        }
    const Partition witness = partition_of({4, 3, 2});
    if (count_syt(witness) != 168 || enumerate_syt(witness).size() != 168) {
        note = "f of (4,3,2) is not 168";
        return false;
    }
    return true;
}

bool inverse_step_soundness(std::string& note) {
    for (int n = 1; n <= 7; ++n) {
        bool bad = false;
        for_each_array(n, ArrayMode::standard, 0, array_count(n, ArrayMode::standard),
                       [&](std::uint64_t, const ArrayPair& a) {
                           if (bad) return;
                           BijectionTrace trace;
                           to_two_row_syt(a, &trace);
                           if (trace.steps() > n) {
                               bad = true;
                               return;
                           }
                           for (int s = 0; s < trace.steps(); ++s) {
                               const ForwardStep step = forward_step(trace.states[s]);
                               if (!(step.state == trace.states[s + 1]) ||
                                   step.pivot != trace.pivots[s] ||
                                   !(inverse_step(step.state) == trace.states[s])) {
                                   bad = true;
                                   return;
                               }
                           }
                       });
        if (bad) {
            note = "n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool remark_identity(std::string& note) {
    for (int n = 1; n <= 6; ++n) {
        const auto matches = remark_matching_weights(n);
        if (matches.size() != 1 || matches.front() != n + 1) {
            note = "rhs indexing not unique or unstable at n=" + std::to_string(n);
            return false;
        }
        const IdentityReport report = certify_remark(n);
        if (!report.ok() || report.rhs_hook_weight != n + 1 ||
            report.lhs != binomial(2 * n + 1, n + 1) || report.lhs != report.rhs) {
            note = "certify_remark failed at n=" + std::to_string(n);
            if (report.failure)
                note += ": " + report.failure->check + " (" + report.failure->detail + ")";
            return false;
        }
    }
    if (certify_remark(1).lhs != 3 || certify_remark(2).lhs != 10) {
        note = "spot values 3 / 10 missed";
        return false;
    }
    return true;
}

bool composition(std::string& note) {
    for (int n = 1; n <= 6; ++n) {
        std::map<std::string, std::string> forward, backward;
        bool collision = false;
        for_each_array(n, ArrayMode::standard, 0, array_count(n, ArrayMode::standard),
                       [&](std::uint64_t, const ArrayPair& a) {
                           const std::string kp = to_json(to_hook_pair(a)).dump();
                           const std::string kt = to_json(to_two_row_syt(a)).dump();
                           collision |= !forward.emplace(kp, kt).second;
                           collision |= !backward.emplace(kt, kp).second;
                       });
        if (collision) {
            note = "composed lookup not well-defined at n=" + std::to_string(n);
            return false;
        }
        // total on the hook-pair side
        for (const auto& mu : hook_partitions(HookFamily{1, 1, n + 1})) {
            const auto tableaux = enumerate_syt(mu, n + 1);
            for (const auto& t1 : tableaux)
                for (const auto& t2 : tableaux)
                    if (!forward.count(to_json(HookTableauPair{t1, t2}).dump())) {
                        note = "a hook pair is missing from the domain at n=" +
                               std::to_string(n);
                        return false;
                    }
        }
        // total on the two-row side
        for (const auto& lambda : hook_partitions(HookFamily{2, 0, 2 * n}))
            for (const auto& t : enumerate_syt(lambda, 2 * n))
                if (!backward.count(to_json(t).dump())) {
                    note = "a two-row SYT is missing from the codomain at n=" +
                           std::to_string(n);
                    return false;
                }
        // mutually inverse
        for (const auto& [kp, kt] : forward)
            if (backward.at(kt) != kp) {
                note = "composition is not involutive at n=" + std::to_string(n);
                return false;
            }
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "worked example fidelity", 1.0, worked_example_fidelity);
    criterion(2, "identity at desk scale (n = 1..8)", 5000.0, identity_at_desk_scale);
    criterion(3, "exhaustive bijectivity (n = 1..8)", 60000.0, exhaustive_bijectivity);
    criterion(4, "counting oracle equivalence (n <= 8)", 30000.0, counting_oracle_equivalence);
    criterion(5, "inverse-step soundness (n <= 7)", 60000.0, inverse_step_soundness);
    criterion(6, "remark identity (n = 1..6)", 60000.0, remark_identity);
    criterion(7, "composition bijection (n <= 6)", 60000.0, composition);
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}

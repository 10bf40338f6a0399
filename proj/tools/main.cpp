#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sytbij/array_pair.hpp"
#include "sytbij/hook_bijection.hpp"
#include "sytbij/json_io.hpp"
#include "sytbij/partition.hpp"
#include "sytbij/tableau.hpp"
#include "sytbij/two_row.hpp"
#include "sytbij/verify.hpp"

using namespace sytbij;
using nlohmann::json;

namespace {

struct Options {
    int n = -1;
    std::string shape;
    std::string mode = "standard";
    std::string format = "json";
    bool with_trace = false;
    std::string input_path;
    int max_n = 0;
};

ArrayMode parse_mode(const std::string& mode) {
    if (mode == "standard") return ArrayMode::standard;
    if (mode == "remark") return ArrayMode::remark;
    throw std::invalid_argument("--mode: expected standard or remark, got '" + mode + "'");
}

Partition parse_shape(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        int value;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("--shape: '" + token + "' is not an integer");
        }
        if (used != token.size())
            throw std::invalid_argument("--shape: '" + token + "' is not an integer");
        parts.push_back(value);
    }
    return partition_of(std::move(parts));
}

json read_input(const Options& opt) {
    std::string text;
    if (!opt.input_path.empty()) {
        std::ifstream file(opt.input_path);
        if (!file) throw std::invalid_argument("--input: cannot open '" + opt.input_path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    } else {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

// --- text rendering ---

std::string text_of(const Partition& p) {
    if (p.parts.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        out += (i ? "," : "") + std::to_string(p.parts[i]);
    return out;
}

std::string text_of_row(const std::vector<int>& row) {
    if (row.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i)
        out += (i ? " " : "") + std::to_string(row[i]);
    return out;
}

std::string text_of(const Tableau& t) {
    std::string out;
    for (const auto& row : t.rows) out += text_of_row(row) + "\n";
    return out;
}

std::string text_of(const ArrayPair& a) {
    return text_of_row(a.top) + "\n" + text_of_row(a.bottom) + "\n";
}

std::string text_of(const TwoRowState& s) {
    return text_of_row(s.top) + "\n" + text_of_row(s.bottom) + "\n";
}

std::string text_of(const HookTableauPair& pair) {
    return "first:\n" + text_of(pair.first) + "second:\n" + text_of(pair.second);
}

std::string text_of(const BijectionTrace& trace) {
    std::string out = text_of(trace.states.front());
    for (std::size_t i = 0; i < trace.pivots.size(); ++i) {
        out += "-> pivot " + std::to_string(trace.pivots[i]) + "\n";
        out += text_of(trace.states[i + 1]);
    }
    return out;
}

std::string text_of(const IdentityReport& report) {
    auto flag = [](bool ok) { return ok ? "ok" : "FAILED"; };
    std::string out;
    out += "n: " + std::to_string(report.n) + "\n";
    out += std::string("mode: ") +
           (report.mode == ArrayMode::standard ? "standard" : "remark") + "\n";
    out += "lhs: " + std::to_string(report.lhs) + "\n";
    out += "rhs: " + std::to_string(report.rhs) + "\n";
    out += "arrays: " + std::to_string(report.array_count) + "\n";
    out += std::string("bijection1: ") + flag(report.bijection1_ok) + "\n";
    out += std::string("bijection2: ") + flag(report.bijection2_ok) + "\n";
    out += std::string("composition: ") + flag(report.composition_ok) + "\n";
    if (report.mode == ArrayMode::remark)
        out += "rhs hook weight: " + std::to_string(report.rhs_hook_weight) + "\n";
    for (const auto& [steps, count] : report.step_histogram)
        out += "steps " + std::to_string(steps) + ": " + std::to_string(count) + "\n";
    if (report.failure)
        out += "failure: " + report.failure->check + " at " +
               text_of_row(report.failure->input.top) + " / " +
               text_of_row(report.failure->input.bottom) + ": " + report.failure->detail + "\n";
    return out;
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump() << "\n";
    else if (opt.format == "text")
        std::cout << text;
    else
        throw std::invalid_argument("--format: expected json or text, got '" + opt.format + "'");
}

// --- verbs ---

int run_count(const Options& opt) {
    const Partition shape = parse_shape(opt.shape);
    std::cout << count_syt(shape) << "\n";
    return 0;
}

int run_hooks(const Options& opt, int arm, int leg) {
    if (opt.n < 0) throw std::invalid_argument("--n: required");
    const auto members = hook_partitions(HookFamily{arm, leg, opt.n});
    json j = json::array();
    std::string text;
    for (const auto& p : members) {
        j.push_back(to_json(p));
        text += text_of(p) + "\n";
    }
    emit(opt, j, text);
    return 0;
}

int run_enumerate(const Options& opt) {
    const bool have_shape = !opt.shape.empty();
    if (have_shape == (opt.n >= 0))
        throw std::invalid_argument("enumerate: give exactly one of --shape or --n");
    json j = json::array();
    std::string text;
    if (have_shape) {
        const Partition shape = parse_shape(opt.shape);
        const int bound = opt.max_n > 0 ? opt.max_n : kDefaultSytBound;
        for (const auto& t : enumerate_syt(shape, bound)) {
            j.push_back(to_json(t));
            text += text_of(t) + "\n";
        }
    } else {
        const int bound = opt.max_n > 0 ? opt.max_n : kDefaultArrayBound;
        for (const auto& a : enumerate_arrays(opt.n, parse_mode(opt.mode), bound)) {
            j.push_back(to_json(a));
            text += text_of(a) + "\n";
        }
    }
    emit(opt, j, text);
    return 0;
}

int run_map1(const Options& opt) {
    const HookTableauPair pair = to_hook_pair(array_pair_from_json(read_input(opt)));
    emit(opt, to_json(pair), text_of(pair));
    return 0;
}

int run_unmap1(const Options& opt) {
    const ArrayPair a = from_hook_pair(hook_pair_from_json(read_input(opt)));
    emit(opt, to_json(a), text_of(a));
    return 0;
}

int run_map2(const Options& opt) {
    const ArrayPair a = array_pair_from_json(read_input(opt));
    if (opt.with_trace) {
        BijectionTrace trace;
        const Tableau t = to_two_row_syt(a, &trace);
        json j = to_json(trace);
        j["tableau"] = to_json(t);
        emit(opt, j, text_of(trace) + "tableau:\n" + text_of(t));
    } else {
        const Tableau t = to_two_row_syt(a);
        emit(opt, to_json(t), text_of(t));
    }
    return 0;
}

int run_unmap2(const Options& opt) {
    const ArrayPair a = from_two_row_syt(tableau_from_json(read_input(opt)));
    emit(opt, to_json(a), text_of(a));
    return 0;
}

int run_compose(const Options& opt) {
    const ArrayPair a = array_pair_from_json(read_input(opt));
    const HookTableauPair pair = to_hook_pair(a);
    const Tableau t = to_two_row_syt(a);
    json j{{"pair", to_json(pair)}, {"tableau", to_json(t)}};
    emit(opt, j, text_of(pair) + "tableau:\n" + text_of(t));
    return 0;
}

int run_verify(const Options& opt, ArrayMode mode) {
    if (opt.n < 0) throw std::invalid_argument("--n: required");
    CertifyOptions certify_options;
    certify_options.max_n = opt.max_n;
    const IdentityReport report = mode == ArrayMode::standard
                                      ? certify(opt.n, certify_options)
                                      : certify_remark(opt.n, certify_options);
    emit(opt, to_json(report), text_of(report));
    return report.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bijections between row-increasing arrays, hook tableau pairs, and "
                 "two-row standard Young tableaux"};
    app.require_subcommand(1);

    Options opt;
    int arm = 1, leg = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format: json or text");
        return cmd;
    };
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input_path, "Read the JSON document from this file");
        return add_common(cmd);
    };

    auto* count = add_common(app.add_subcommand("count", "Number of SYTs of a shape"));
    count->add_option("--shape", opt.shape, "Comma-separated parts, e.g. 4,3,2")->required();

    auto* hooks = add_common(app.add_subcommand("hooks", "Partitions in H(k,l;n)"));
    hooks->add_option("--n", opt.n, "Weight of the partitions")->required();
    hooks->add_option("--k", arm, "Arm width k (default 1)");
    hooks->add_option("--l", leg, "Leg width l (default 1)");

    auto* enumerate = add_common(
        app.add_subcommand("enumerate", "All arrays for --n, or all SYTs for --shape"));
    enumerate->add_option("--n", opt.n, "Array half-size n");
    enumerate->add_option("--shape", opt.shape, "Tableau shape");
    enumerate->add_option("--mode", opt.mode, "standard or remark (arrays only)");
    enumerate->add_option("--max-n", opt.max_n, "Override the enumeration bound");

    auto* map1 = add_input(app.add_subcommand("map1", "Array to hook tableau pair"));
    auto* unmap1 = add_input(app.add_subcommand("unmap1", "Hook tableau pair to array"));
    auto* map2 = add_input(app.add_subcommand("map2", "Array to two-row SYT"));
    map2->add_flag("--trace", opt.with_trace, "Include the step-by-step trace");
    auto* unmap2 = add_input(app.add_subcommand("unmap2", "Two-row SYT to array"));
    auto* trace = add_input(app.add_subcommand("trace", "Array to two-row SYT with full trace"));
    auto* compose =
        add_input(app.add_subcommand("compose", "Both images of one array, linked"));

    auto* verify = add_common(app.add_subcommand("verify", "Exhaustively certify at one n"));
    verify->add_option("--n", opt.n, "Half-size n")->required();
    verify->add_option("--max-n", opt.max_n, "Override the exhaustive bound");

    auto* verify_remark = add_common(
        app.add_subcommand("verify-remark", "Certify the (n+1,n) variant at one n"));
    verify_remark->add_option("--n", opt.n, "Bottom-row size n")->required();
    verify_remark->add_option("--max-n", opt.max_n, "Override the exhaustive bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) return run_count(opt);
        if (hooks->parsed()) return run_hooks(opt, arm, leg);
        if (enumerate->parsed()) return run_enumerate(opt);
        if (map1->parsed()) return run_map1(opt);
        if (unmap1->parsed()) return run_unmap1(opt);
        if (map2->parsed()) return run_map2(opt);
        if (unmap2->parsed()) return run_unmap2(opt);
        if (trace->parsed()) {
            opt.with_trace = true;
            return run_map2(opt);
        }
        if (compose->parsed()) return run_compose(opt);
        if (verify->parsed()) return run_verify(opt, ArrayMode::standard);
        if (verify_remark->parsed()) return run_verify(opt, ArrayMode::remark);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

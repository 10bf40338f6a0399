#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sytbij/array_pair.hpp"
#include "sytbij/hook_bijection.hpp"
#include "sytbij/json_io.hpp"
#include "sytbij/partition.hpp"
#include "sytbij/tableau.hpp"
#include "sytbij/two_row.hpp"
#include "sytbij/verify.hpp"

namespace py = pybind11;
using namespace sytbij;

namespace {

using Rows = std::vector<std::vector<int>>;

ArrayPair array_from_rows(const Rows& rows) {
    if (rows.size() != 2)
        throw std::invalid_argument("rows: expected exactly two rows");
    return array_pair(rows[0], rows[1]);
}

ArrayMode mode_from_string(const std::string& mode) {
    if (mode == "standard") return ArrayMode::standard;
    if (mode == "remark") return ArrayMode::remark;
    throw std::invalid_argument("mode: expected 'standard' or 'remark'");
}

std::vector<std::vector<int>> parts_list(const std::vector<Partition>& ps) {
    std::vector<std::vector<int>> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(p.parts);
    return out;
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

CertifyOptions options_of(int max_n, int threads) {
    CertifyOptions o;
    o.max_n = max_n;
    o.threads = threads;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bijections between row-increasing arrays, hook tableau pairs, and "
              "two-row standard Young tableaux.";

    m.def(
        "count_syt", [](const std::vector<int>& parts) { return count_syt(partition_of(parts)); },
        py::arg("shape"), "Number of standard Young tableaux of the shape (hook length formula).");

    m.def(
        "enumerate_syt",
        [](const std::vector<int>& parts, int max_weight) {
            std::vector<Rows> out;
            for (const auto& t : enumerate_syt(partition_of(parts), max_weight))
                out.push_back(t.rows);
            return out;
        },
        py::arg("shape"), py::arg("max_weight") = kDefaultSytBound,
        "Every SYT of the shape, as lists of rows.");

    m.def(
        "is_standard", [](const Rows& rows) { return is_standard(Tableau{rows}); },
        py::arg("rows"));

    m.def(
        "partitions", [](int n) { return parts_list(partitions_of(n)); }, py::arg("n"),
        "All partitions of n in reverse-lexicographic order.");

    m.def(
        "hook_partitions",
        [](int k, int l, int n) { return parts_list(hook_partitions(HookFamily{k, l, n})); },
        py::arg("k"), py::arg("l"), py::arg("n"), "Members of H(k,l;n).");

    m.def(
        "in_hook",
        [](const std::vector<int>& parts, int k, int l, int n) {
            return HookFamily{k, l, n}.contains(partition_of(parts));
        },
        py::arg("shape"), py::arg("k"), py::arg("l"), py::arg("n"));

    m.def(
        "plus_one",
        [](const std::vector<int>& parts) { return plus_one(partition_of(parts)).parts; },
        py::arg("shape"));

    m.def(
        "enumerate_arrays",
        [](int n, const std::string& mode, int max_n) {
            std::vector<Rows> out;
            for (const auto& a : enumerate_arrays(n, mode_from_string(mode), max_n))
                out.push_back({a.top, a.bottom});
            return out;
        },
        py::arg("n"), py::arg("mode") = "standard", py::arg("max_n") = kDefaultArrayBound,
        "All valid arrays as [top, bottom] row pairs, ordered by the top-row set.");

    m.def(
        "to_hook_pair",
        [](const Rows& rows) {
            const HookTableauPair pair = to_hook_pair(array_from_rows(rows));
            return py::make_tuple(pair.first.rows, pair.second.rows);
        },
        py::arg("rows"), "Map an array to its (first, second) hook tableau pair.");

    m.def(
        "from_hook_pair",
        [](const Rows& first, const Rows& second) {
            const ArrayPair a = from_hook_pair(HookTableauPair{Tableau{first}, Tableau{second}});
            return Rows{a.top, a.bottom};
        },
        py::arg("first"), py::arg("second"), "Inverse of to_hook_pair.");

    m.def(
        "to_two_row_syt",
        [](const Rows& rows) { return to_two_row_syt(array_from_rows(rows)).rows; },
        py::arg("rows"), "Map an array to its at-most-two-row SYT.");

    m.def(
        "trace",
        [](const Rows& rows) {
            BijectionTrace trace;
            const Tableau t = to_two_row_syt(array_from_rows(rows), &trace);
            nlohmann::json j = to_json(trace);
            j["tableau"] = to_json(t);
            return json_to_py(j);
        },
        py::arg("rows"), "The full pivot-swap trace plus the final tableau.");

    m.def(
        "from_two_row_syt",
        [](const Rows& rows) {
            const ArrayPair a = from_two_row_syt(Tableau{rows});
            return Rows{a.top, a.bottom};
        },
        py::arg("rows"), "Inverse of to_two_row_syt.");

    m.def(
        "forward_step",
        [](const Rows& rows) {
            if (rows.size() != 2) throw std::invalid_argument("rows: expected two rows");
            const ForwardStep step = forward_step(TwoRowState{rows[0], rows[1]});
            return py::make_tuple(Rows{step.state.top, step.state.bottom}, step.pivot);
        },
        py::arg("rows"), "One pivot swap; returns (state, pivot).");

    m.def(
        "inverse_step",
        [](const Rows& rows) {
            if (rows.size() != 2) throw std::invalid_argument("rows: expected two rows");
            const TwoRowState prev = inverse_step(TwoRowState{rows[0], rows[1]});
            return Rows{prev.top, prev.bottom};
        },
        py::arg("rows"), "Undo one pivot swap.");

    m.def(
        "identity_sides",
        [](int n) {
            const auto [lhs, rhs] = identity_sides(n);
            return py::make_tuple(lhs, rhs);
        },
        py::arg("n"),
        "(sum of squared hook counts over H(1,1;n+1), sum of counts over H(2,0;2n)).");

    m.def("remark_pair_sum", &remark_pair_sum, py::arg("hook_weight"));
    m.def("remark_matching_weights", &remark_matching_weights, py::arg("n"));

    m.def(
        "certify",
        [](int n, int max_n, int threads) {
            return json_to_py(to_json(certify(n, options_of(max_n, threads))));
        },
        py::arg("n"), py::arg("max_n") = 0, py::arg("threads") = 0,
        "Exhaustive certification report as a dict.");

    m.def(
        "certify_remark",
        [](int n, int max_n, int threads) {
            return json_to_py(to_json(certify_remark(n, options_of(max_n, threads))));
        },
        py::arg("n"), py::arg("max_n") = 0, py::arg("threads") = 0,
        "Certification report for the (n+1,n) variant as a dict.");
}

#include "sytbij/json_io.hpp"

#include <stdexcept>

namespace sytbij {

using nlohmann::json;

namespace {

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

const json& require_field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object())
        throw std::invalid_argument((path.empty() ? std::string("document") : path) +
                                    ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw std::invalid_argument(join(path, key) + ": missing field");
    return *it;
}

std::vector<int> int_row(const json& j, const std::string& path) {
    if (!j.is_array()) throw std::invalid_argument(path + ": expected an array");
    std::vector<int> row;
    row.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (!e.is_number_integer())
            throw std::invalid_argument(path + "[" + std::to_string(i) + "]: expected an integer");
        row.push_back(e.get<int>());
    }
    return row;
}

std::vector<std::vector<int>> int_rows(const json& j, const std::string& path) {
    if (!j.is_array()) throw std::invalid_argument(path + ": expected an array of rows");
    std::vector<std::vector<int>> rows;
    rows.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        rows.push_back(int_row(j[i], path + "[" + std::to_string(i) + "]"));
    return rows;
}

}  // namespace

json to_json(const Partition& p) {
    return json(p.parts);
}

json to_json(const Tableau& t) {
    return json{{"rows", t.rows}};
}

json to_json(const ArrayPair& a) {
    return json{{"rows", json::array({a.top, a.bottom})}};
}

json to_json(const HookTableauPair& pair) {
    return json{{"first", to_json(pair.first)}, {"second", to_json(pair.second)}};
}

json to_json(const TwoRowState& s) {
    return json{{"rows", json::array({s.top, s.bottom})}};
}

json to_json(const BijectionTrace& trace) {
    json steps = json::array();
    for (std::size_t i = 0; i < trace.pivots.size(); ++i)
        steps.push_back(json{{"pivot", trace.pivots[i]}, {"state", to_json(trace.states[i + 1])}});
    return json{{"steps", std::move(steps)}};
}

json to_json(const IdentityReport& report) {
    json histogram = json::object();
    for (const auto& [steps, count] : report.step_histogram)
        histogram[std::to_string(steps)] = count;
    json j{{"n", report.n},
           {"mode", report.mode == ArrayMode::standard ? "standard" : "remark"},
           {"lhs", report.lhs},
           {"rhs", report.rhs},
           {"array_count", report.array_count},
           {"bijection1_ok", report.bijection1_ok},
           {"bijection2_ok", report.bijection2_ok},
           {"composition_ok", report.composition_ok},
           {"step_histogram", std::move(histogram)}};
    if (report.mode == ArrayMode::remark) {
        j["rhs_hook_weight"] = report.rhs_hook_weight;
        if (report.rhs_hook_weight >= 0) {
            const int offset = report.rhs_hook_weight - report.n;
            j["rhs_indexing"] = "H(1,1;n" +
                                (offset == 0 ? std::string()
                                             : (offset > 0 ? "+" + std::to_string(offset)
                                                           : std::to_string(offset))) +
                                ")";
        }
    }
    if (report.failure) {
        j["failure"] = json{{"check", report.failure->check},
                            {"input", to_json(report.failure->input)},
                            {"detail", report.failure->detail}};
    }
    return j;
}

Partition partition_from_json(const json& j, const std::string& path) {
    try {
        return partition_of(int_row(j, path.empty() ? "shape" : path));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument((path.empty() ? "shape" : path) + ": " + e.what());
    }
}

Tableau tableau_from_json(const json& j, const std::string& path) {
    const auto& rows = require_field(j, "rows", path);
    return Tableau{int_rows(rows, join(path, "rows"))};
}

ArrayPair array_pair_from_json(const json& j, const std::string& path) {
    const auto& rows_field = require_field(j, "rows", path);
    auto rows = int_rows(rows_field, join(path, "rows"));
    if (rows.size() != 2)
        throw std::invalid_argument(join(path, "rows") + ": expected exactly two rows");
    try {
        return array_pair(std::move(rows[0]), std::move(rows[1]));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(
            path.empty() ? std::string(e.what()) : path + "." + e.what());
    }
}

HookTableauPair hook_pair_from_json(const json& j, const std::string& path) {
    return HookTableauPair{tableau_from_json(require_field(j, "first", path), join(path, "first")),
                           tableau_from_json(require_field(j, "second", path),
                                             join(path, "second"))};
}

}  // namespace sytbij

#pragma once

#include <string>

#include <json.hpp>

#include "sytbij/array_pair.hpp"
#include "sytbij/hook_bijection.hpp"
#include "sytbij/partition.hpp"
#include "sytbij/tableau.hpp"
#include "sytbij/two_row.hpp"
#include "sytbij/verify.hpp"

namespace sytbij {

// Schemas:
//   Partition       [int,...]
//   Tableau         {"rows": [[int,...],...]}
//   ArrayPair       {"rows": [[int,...],[int,...]]}, top row first
//   HookTableauPair {"first": Tableau, "second": Tableau}
//   Trace           {"steps": [{"pivot": int, "state": {"rows": [[...],[...]]}}, ...]}
//   IdentityReport  mirrors the struct fields

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Tableau& t);
nlohmann::json to_json(const ArrayPair& a);
nlohmann::json to_json(const HookTableauPair& pair);
nlohmann::json to_json(const TwoRowState& s);
nlohmann::json to_json(const BijectionTrace& trace);
nlohmann::json to_json(const IdentityReport& report);

// Parsers validate and throw std::invalid_argument naming the offending
// field path ("rows[1][2]: ...").
Partition partition_from_json(const nlohmann::json& j, const std::string& path = "");
Tableau tableau_from_json(const nlohmann::json& j, const std::string& path = "");
ArrayPair array_pair_from_json(const nlohmann::json& j, const std::string& path = "");
HookTableauPair hook_pair_from_json(const nlohmann::json& j, const std::string& path = "");

}  // namespace sytbij

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "asklab/battery.hpp"

namespace asklab {

nlohmann::json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& content);

// Integers are JSON numbers up to 2^63 and decimal strings beyond.
Int int_from_json(const nlohmann::json& j);
nlohmann::json int_to_json(const Int& v);

ModuleRep rep_from_json(const nlohmann::json& j);
nlohmann::json rep_to_json(const ModuleRep& rep);

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

LieData lie_from_json(const nlohmann::json& j);
nlohmann::json lie_to_json(const LieData& lie);

LaurentPoly laurent_from_json(const nlohmann::json& j);
nlohmann::json laurent_to_json(const LaurentPoly& f);

SRingElem sring_from_json(const nlohmann::json& j);
nlohmann::json sring_to_json(const SRingElem& s);

AffineScheme scheme_from_json(const nlohmann::json& j);
nlohmann::json scheme_to_json(const AffineScheme& y);

BBDecomposition decomp_from_json(const nlohmann::json& j);
nlohmann::json decomp_to_json(const BBDecomposition& d);

// Entries reference other files by path, resolved against the config's
// directory; reps, graphs and Lie data may also be inlined.
BatteryConfig load_battery_config(const std::string& path);

// Sample table: header q_p,q_f,num,den_exp then one row per sample; the value
// is num / q^den_exp.
std::vector<std::pair<PrimePower, Rat>> load_samples_csv(const std::string& path);

}  // namespace asklab

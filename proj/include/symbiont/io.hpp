#pragma once

#include "symbiont/adoption.hpp"
#include "symbiont/comparison.hpp"
#include "symbiont/equilibrium.hpp"
#include "symbiont/params.hpp"
#include "symbiont/verification.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace symbiont {

/// Scenario documents are flat JSON objects holding exactly the ten keys
/// a, b, c, n, d, g, alpha, k, p_g, c_g. Missing or unknown keys raise
/// ParamError(MissingKey / UnknownKey) naming the key; values are then
/// validated as usual.
ScenarioValues scenario_values_from_json(const nlohmann::json& doc);
Scenario scenario_from_json(const nlohmann::json& doc);
Scenario parse_scenario(std::string_view text);

nlohmann::json to_json(const ScenarioValues& v);
nlohmann::json to_json(const Equilibrium& e);
nlohmann::json to_json(const AdoptionAnalysis& a);
nlohmann::json to_json(const ComparisonReport& r);
nlohmann::json to_json(const VerificationRecord& r);

/// Fixed-point formatting with 12 decimals; negative zero prints as zero.
std::string fixed12(double v);

/// 12 significant digits, C locale.
std::string sig12(double v);

}  // namespace symbiont

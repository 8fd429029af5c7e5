#include "symbiont/io.hpp"

#include <cmath>
#include <cstdio>

namespace symbiont {

using nlohmann::json;

ScenarioValues scenario_values_from_json(const json& doc) {
  if (!doc.is_object()) throw ParamError(ParamErrorKind::MalformedDocument, "<root>", "scenario must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!ScenarioValues::is_key(key)) throw ParamError(ParamErrorKind::UnknownKey, key, "unknown scenario key");
  }
  ScenarioValues v;
  for (const std::string_view key : ScenarioValues::keys) {
    const auto it = doc.find(std::string(key));
    if (it == doc.end()) throw ParamError(ParamErrorKind::MissingKey, std::string(key), "missing scenario key");
    if (!it->is_number())
      throw ParamError(ParamErrorKind::MalformedDocument, std::string(key), "value must be a number");
    v.at(key) = it->get<double>();
  }
  return v;
}

Scenario scenario_from_json(const json& doc) { return validate_scenario(scenario_values_from_json(doc)); }

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParamError(ParamErrorKind::MalformedDocument, "<root>", e.what());
  }
  return scenario_from_json(doc);
}

json to_json(const ScenarioValues& v) {
  json out = json::object();
  for (const std::string_view key : ScenarioValues::keys) {
    if (key == "n")
      out["n"] = static_cast<long long>(v.n);
    else
      out[std::string(key)] = v.at(key);
  }
  return out;
}

json to_json(const Equilibrium& e) {
  return {{"regime", std::string(to_string(e.regime))},
          {"q", e.q},
          {"p", e.p},
          {"profit", e.profit},
          {"cs", e.cs},
          {"ts", e.ts},
          {"poll", e.poll}};
}

json to_json(const AdoptionAnalysis& a) {
  return {{"cutoff_star", a.cutoff_star},
          {"cutoff_prime", a.cutoff_prime},
          {"deviation_gain_from_benchmark", a.deviation_gain_from_benchmark},
          {"none_adopt_is_equilibrium", a.none_adopt_is_equilibrium},
          {"all_adopt_is_equilibrium", a.all_adopt_is_equilibrium}};
}

json to_json(const ComparisonReport& r) {
  json out = {{"delta_q", r.delta_q},
              {"delta_p", r.delta_p},
              {"delta_cs", r.delta_cs},
              {"delta_pi", r.delta_pi},
              {"delta_ts", r.delta_ts},
              {"delta_poll", r.delta_poll},
              {"gain_per_unit", r.gain_per_unit},
              {"ts_sufficient_condition", r.ts_sufficient_condition},
              {"poll_sign_lhs", r.poll_sign_lhs},
              {"poll_increases", r.poll_increases},
              {"delta_pi_net", r.delta_pi_net},
              {"poll_at_boundary", r.poll_at_boundary},
              {"degenerate_gain", r.degenerate_gain},
              {"negative_symbiosis_poll", r.negative_symbiosis_poll}};
  // NaN has no JSON spelling; the undefined ratio is written as null.
  out["poll_sign_rhs"] = std::isfinite(r.poll_sign_rhs) ? json(r.poll_sign_rhs) : json(nullptr);
  return out;
}

json to_json(const VerificationRecord& r) {
  json checks = json::array();
  for (const CheckResult& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"closed_form", c.closed_form},
                      {"oracle", c.oracle},
                      {"abs_error", c.abs_error},
                      {"rel_error", c.rel_error},
                      {"tolerance", c.tolerance}});
  }
  json out = {{"scenario", to_json(r.scenario)}, {"passed", r.passed()}, {"checks", std::move(checks)}};
  if (!r.error.empty()) out["error"] = r.error;
  return out;
}

std::string fixed12(double v) {
  if (v == 0) v = 0;  // drop the sign of -0.0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::string sig12(double v) {
  if (v == 0) v = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace symbiont

#include "symbiont/params.hpp"

#include <algorithm>
#include <cmath>

namespace symbiont {

std::string_view to_string(ParamErrorKind kind) {
  switch (kind) {
    case ParamErrorKind::NonFiniteParameter: return "NonFiniteParameter";
    case ParamErrorKind::NonPositiveParameter: return "NonPositiveParameter";
    case ParamErrorKind::NonIntegerFirmCount: return "NonIntegerFirmCount";
    case ParamErrorKind::NegativeTaxRate: return "NegativeTaxRate";
    case ParamErrorKind::PollutionShareOutOfRange: return "PollutionShareOutOfRange";
    case ParamErrorKind::MarketViability: return "MarketViability";
    case ParamErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ParamErrorKind::KOutOfRange: return "KOutOfRange";
    case ParamErrorKind::NegativePrice: return "NegativePrice";
    case ParamErrorKind::NegativeCost: return "NegativeCost";
    case ParamErrorKind::MissingKey: return "MissingKey";
    case ParamErrorKind::UnknownKey: return "UnknownKey";
    case ParamErrorKind::MalformedDocument: return "MalformedDocument";
  }
  return "Unknown";
}

ParamError::ParamError(ParamErrorKind kind, std::string field, const std::string& detail)
    : std::invalid_argument(std::string(to_string(kind)) + " (" + field + "): " + detail),
      kind_(kind),
      field_(std::move(field)) {}

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ParamError(ParamErrorKind::NonFiniteParameter, name, "must be finite");
}

void require_positive(double v, const char* name) {
  if (!(v > 0)) throw ParamError(ParamErrorKind::NonPositiveParameter, name, "must be > 0");
}

}  // namespace

MarketParams validate_market(const RawMarket& raw) {
  require_finite(raw.a, "a");
  require_finite(raw.b, "b");
  require_finite(raw.c, "c");
  require_finite(raw.n, "n");
  require_finite(raw.d, "d");
  require_finite(raw.g, "g");

  require_positive(raw.a, "a");
  require_positive(raw.b, "b");
  require_positive(raw.c, "c");
  if (!(raw.n >= 1)) throw ParamError(ParamErrorKind::NonPositiveParameter, "n", "must be >= 1");
  if (raw.n != std::floor(raw.n) || raw.n > 1e9)
    throw ParamError(ParamErrorKind::NonIntegerFirmCount, "n", "must be a whole number of firms");
  if (raw.d < 0) throw ParamError(ParamErrorKind::NegativeTaxRate, "d", "must be >= 0");
  if (!(raw.g > 0 && raw.g < 1))
    throw ParamError(ParamErrorKind::PollutionShareOutOfRange, "g", "must lie in (0, 1)");
  if (!(raw.a - raw.d * raw.g > 0))
    throw ParamError(ParamErrorKind::MarketViability, "a-dg", "a - d*g must be > 0");

  MarketParams m;
  m.a_ = raw.a;
  m.b_ = raw.b;
  m.c_ = raw.c;
  m.n_ = static_cast<int>(raw.n);
  m.d_ = raw.d;
  m.g_ = raw.g;
  return m;
}

SymbiosisTech validate_tech(const RawTech& raw) {
  require_finite(raw.alpha, "alpha");
  require_finite(raw.k, "k");
  require_finite(raw.p_g, "p_g");
  require_finite(raw.c_g, "c_g");

  if (!(raw.alpha > 0 && raw.alpha < 1))
    throw ParamError(ParamErrorKind::AlphaOutOfRange, "alpha", "must lie in (0, 1)");
  if (!(raw.k < 1)) throw ParamError(ParamErrorKind::KOutOfRange, "k", "must be < 1");
  if (raw.p_g < 0) throw ParamError(ParamErrorKind::NegativePrice, "p_g", "must be >= 0");
  if (raw.c_g < 0) throw ParamError(ParamErrorKind::NegativeCost, "c_g", "must be >= 0");

  SymbiosisTech t;
  t.alpha_ = raw.alpha;
  t.k_ = raw.k;
  t.p_g_ = raw.p_g;
  t.c_g_ = raw.c_g;
  return t;
}

bool ScenarioValues::is_key(std::string_view key) noexcept {
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

double& ScenarioValues::at(std::string_view key) {
  if (key == "a") return a;
  if (key == "b") return b;
  if (key == "c") return c;
  if (key == "n") return n;
  if (key == "d") return d;
  if (key == "g") return g;
  if (key == "alpha") return alpha;
  if (key == "k") return k;
  if (key == "p_g") return p_g;
  if (key == "c_g") return c_g;
  throw ParamError(ParamErrorKind::UnknownKey, std::string(key), "not a scenario parameter");
}

double ScenarioValues::at(std::string_view key) const {
  return const_cast<ScenarioValues&>(*this).at(key);
}

ScenarioValues Scenario::values() const noexcept {
  const RawMarket m = market.raw();
  const RawTech t = tech.raw();
  return {m.a, m.b, m.c, m.n, m.d, m.g, t.alpha, t.k, t.p_g, t.c_g};
}

Scenario validate_scenario(const ScenarioValues& v) {
  return {validate_market({v.a, v.b, v.c, v.n, v.d, v.g}), validate_tech({v.alpha, v.k, v.p_g, v.c_g})};
}

ScenarioValues reference_values() noexcept {
  return {9.0, 1.0, 1.0, 4.0, 10.0, 0.5, 0.5, 0.0, 6.0, 0.1};
}

Scenario reference_scenario() { return validate_scenario(reference_values()); }

}  // namespace symbiont

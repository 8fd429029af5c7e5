#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symbiont {

enum class ParamErrorKind {
  NonFiniteParameter,
  NonPositiveParameter,
  NonIntegerFirmCount,
  NegativeTaxRate,
  PollutionShareOutOfRange,
  MarketViability,
  AlphaOutOfRange,
  KOutOfRange,
  NegativePrice,
  NegativeCost,
  MissingKey,
  UnknownKey,
  MalformedDocument,
};

std::string_view to_string(ParamErrorKind kind);

/// Raised when a raw parameter set violates a standing assumption of the model.
/// `field()` names the offending parameter (or scenario key).
class ParamError : public std::invalid_argument {
 public:
  ParamError(ParamErrorKind kind, std::string field, const std::string& detail);

  ParamErrorKind kind() const noexcept { return kind_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ParamErrorKind kind_;
  std::string field_;
};

struct RawMarket {
  double a = 0, b = 0, c = 0, n = 0, d = 0, g = 0;
};

struct RawTech {
  double alpha = 0, k = 0, p_g = 0, c_g = 0;
};

/// Demand p = a - bQ, quadratic production cost c q^2, pollution fine d per
/// unit of pollution, pollution share g per unit of product, n identical firms.
class MarketParams {
 public:
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  int n() const noexcept { return n_; }
  double d() const noexcept { return d_; }
  double g() const noexcept { return g_; }

  RawMarket raw() const noexcept { return {a_, b_, c_, static_cast<double>(n_), d_, g_}; }

  friend bool operator==(const MarketParams&, const MarketParams&) = default;

 private:
  friend MarketParams validate_market(const RawMarket& raw);
  MarketParams() = default;

  double a_ = 0, b_ = 0, c_ = 0;
  int n_ = 0;
  double d_ = 0, g_ = 0;
};

/// Industrial symbiosis technology: reused byproduct share alpha, emission
/// share k of the reuse process, byproduct price p_g, fixed adoption cost c_g.
class SymbiosisTech {
 public:
  double alpha() const noexcept { return alpha_; }
  double k() const noexcept { return k_; }
  double p_g() const noexcept { return p_g_; }
  double c_g() const noexcept { return c_g_; }

  RawTech raw() const noexcept { return {alpha_, k_, p_g_, c_g_}; }

  friend bool operator==(const SymbiosisTech&, const SymbiosisTech&) = default;

 private:
  friend SymbiosisTech validate_tech(const RawTech& raw);
  SymbiosisTech() = default;

  double alpha_ = 0, k_ = 0, p_g_ = 0, c_g_ = 0;
};

// Checks run in declaration order; the first violation is thrown.
MarketParams validate_market(const RawMarket& raw);
SymbiosisTech validate_tech(const RawTech& raw);

/// Flat view of all ten scenario parameters, addressable by key.
struct ScenarioValues {
  double a = 0, b = 0, c = 0, n = 0, d = 0, g = 0;
  double alpha = 0, k = 0, p_g = 0, c_g = 0;

  static constexpr std::array<std::string_view, 10> keys{
      "a", "b", "c", "n", "d", "g", "alpha", "k", "p_g", "c_g"};

  static bool is_key(std::string_view key) noexcept;

  // Throws ParamError(UnknownKey) for names outside `keys`.
  double& at(std::string_view key);
  double at(std::string_view key) const;

  friend bool operator==(const ScenarioValues&, const ScenarioValues&) = default;
};

struct Scenario {
  MarketParams market;
  SymbiosisTech tech;

  ScenarioValues values() const noexcept;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

Scenario validate_scenario(const ScenarioValues& values);

/// a=9, b=1, c=1, n=4, d=10, g=0.5, alpha=0.5, k=0, p_g=6, c_g=0.1.
/// At this point the pollution gap is exactly zero.
ScenarioValues reference_values() noexcept;
Scenario reference_scenario();

}  // namespace symbiont

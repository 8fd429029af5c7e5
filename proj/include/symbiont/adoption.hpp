#pragma once

#include "symbiont/params.hpp"

namespace symbiont {

/// Which symmetric adoption profiles survive a single-firm deviation.
///
/// Deviators hold their quantity at the origin profile's equilibrium output.
/// A tie between deviating and staying counts as "no profitable deviation",
/// so a profile whose cutoff equals c_g exactly is reported as an equilibrium.
struct AdoptionAnalysis {
  double cutoff_star = 0;   // largest c_g at which a benchmark firm wants to adopt
  double cutoff_prime = 0;  // largest c_g at which an adopting firm stays adopted
  double deviation_gain_from_benchmark = 0;
  bool none_adopt_is_equilibrium = false;
  bool all_adopt_is_equilibrium = false;

  bool multiple_equilibria() const noexcept {
    return none_adopt_is_equilibrium && all_adopt_is_equilibrium;
  }
};

/// q_benchmark * alpha*g*(d + p_g).
double cutoff_star(const MarketParams& m, const SymbiosisTech& t);

/// q_symbiosis * alpha*g*(d + p_g).
double cutoff_prime(const MarketParams& m, const SymbiosisTech& t);

/// Profit of a lone adopter at benchmark price and quantity:
/// pi + q*alpha*g*(d + p_g) - c_g.
double deviation_profit_from_benchmark(const MarketParams& m, const SymbiosisTech& t);

/// Profit of a lone firm dropping symbiosis at the symbiosis price and quantity
/// (gross of c_g, since it no longer pays it).
double deviation_profit_from_symbiosis(const MarketParams& m, const SymbiosisTech& t);

AdoptionAnalysis classify_equilibria(const MarketParams& m, const SymbiosisTech& t);

struct CutoffSensitivities {
  double d_alpha = 0;
  double d_p_g = 0;
  double d_n = 0;  // n treated as continuous
};

CutoffSensitivities cutoff_sensitivities(const MarketParams& m, const SymbiosisTech& t);

}  // namespace symbiont

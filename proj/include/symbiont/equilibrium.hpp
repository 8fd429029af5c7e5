#pragma once

#include "symbiont/params.hpp"
#include "symbiont/primitives.hpp"

namespace symbiont {

/// Symmetric competitive equilibrium of one regime.
///
/// `profit` is per firm and, in the symbiosis regime, net of the fixed
/// adoption cost; `fixed_cost` records that cost so the gross figure stays
/// recoverable. `poll` is total market pollution (all n firms) and may be
/// negative in the symbiosis regime when k is negative enough that
/// alpha*k + 1 - alpha < 0.
struct Equilibrium {
  Regime regime = Regime::Benchmark;
  double q = 0;
  double p = 0;
  double profit = 0;
  double cs = 0;
  double ts = 0;
  double poll = 0;
  double fixed_cost = 0;

  double gross_profit() const noexcept { return profit + fixed_cost; }
};

/// Per-unit profitability gain from symbiosis, G = alpha*g*(d + p_g):
/// byproduct revenue plus the avoided fine.
double profitability_gain(const MarketParams& m, const SymbiosisTech& t);

Equilibrium benchmark_equilibrium(const MarketParams& m);
Equilibrium symbiosis_equilibrium(const MarketParams& m, const SymbiosisTech& t);

inline Equilibrium equilibrium(const Scenario& s, Regime regime) {
  return regime == Regime::Benchmark ? benchmark_equilibrium(s.market)
                                     : symbiosis_equilibrium(s.market, s.tech);
}

}  // namespace symbiont

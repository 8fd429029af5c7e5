#include "symbiont/equilibrium.hpp"

namespace symbiont {

namespace {

// Both regimes share one shape: q = margin/(2c+bn) with margin = a - dg + gain,
// gain being zero in the benchmark.
Equilibrium solve_regime(const MarketParams& m, double gain, double fixed_cost, Regime regime) {
  const double n = static_cast<double>(m.n());
  const double denom = 2.0 * m.c() + m.b() * n;
  const double dg = m.d() * m.g();
  const double margin = m.a() - dg + gain;

  Equilibrium e;
  e.regime = regime;
  e.fixed_cost = fixed_cost;
  e.q = margin / denom;
  e.p = (2.0 * m.a() * m.c() + m.b() * n * (dg - gain)) / denom;
  e.profit = m.c() * margin * margin / (denom * denom) - fixed_cost;
  e.cs = m.b() * n * n * margin * margin / (2.0 * denom * denom);
  e.ts = n * margin * margin / (2.0 * denom) - n * fixed_cost;
  return e;
}

}  // namespace

double profitability_gain(const MarketParams& m, const SymbiosisTech& t) {
  return t.alpha() * m.g() * (m.d() + t.p_g());
}

Equilibrium benchmark_equilibrium(const MarketParams& m) {
  Equilibrium e = solve_regime(m, 0.0, 0.0, Regime::Benchmark);
  e.poll = m.g() * static_cast<double>(m.n()) * e.q;
  return e;
}

Equilibrium symbiosis_equilibrium(const MarketParams& m, const SymbiosisTech& t) {
  Equilibrium e = solve_regime(m, profitability_gain(m, t), t.c_g(), Regime::Symbiosis);
  e.poll = (t.alpha() * t.k() + 1.0 - t.alpha()) * static_cast<double>(m.n()) * m.g() * e.q;
  return e;
}

}  // namespace symbiont

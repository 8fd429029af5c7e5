#include "symbiont/adoption.hpp"

#include "symbiont/equilibrium.hpp"

namespace symbiont {

double cutoff_star(const MarketParams& m, const SymbiosisTech& t) {
  return benchmark_equilibrium(m).q * profitability_gain(m, t);
}

double cutoff_prime(const MarketParams& m, const SymbiosisTech& t) {
  return symbiosis_equilibrium(m, t).q * profitability_gain(m, t);
}

double deviation_profit_from_benchmark(const MarketParams& m, const SymbiosisTech& t) {
  const Equilibrium bench = benchmark_equilibrium(m);
  return bench.profit + (bench.q * profitability_gain(m, t) - t.c_g());
}

double deviation_profit_from_symbiosis(const MarketParams& m, const SymbiosisTech& t) {
  const Equilibrium symb = symbiosis_equilibrium(m, t);
  return symb.profit - symb.q * profitability_gain(m, t) + t.c_g();
}

AdoptionAnalysis classify_equilibria(const MarketParams& m, const SymbiosisTech& t) {
  AdoptionAnalysis out;
  out.cutoff_star = cutoff_star(m, t);
  out.cutoff_prime = cutoff_prime(m, t);
  out.deviation_gain_from_benchmark = out.cutoff_star - t.c_g();
  out.none_adopt_is_equilibrium = t.c_g() >= out.cutoff_star;
  out.all_adopt_is_equilibrium = t.c_g() <= out.cutoff_prime;
  return out;
}

CutoffSensitivities cutoff_sensitivities(const MarketParams& m, const SymbiosisTech& t) {
  const double n = static_cast<double>(m.n());
  const double denom = 2.0 * m.c() + m.b() * n;
  const double margin = m.a() - m.d() * m.g();
  const double spread = m.d() + t.p_g();

  CutoffSensitivities s;
  s.d_alpha = margin * m.g() * spread / denom;
  s.d_p_g = margin * t.alpha() * m.g() / denom;
  s.d_n = -m.b() * margin * profitability_gain(m, t) / (denom * denom);
  return s;
}

}  // namespace symbiont

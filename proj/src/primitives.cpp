#include "symbiont/primitives.hpp"

namespace symbiont {

std::string_view to_string(Regime regime) {
  return regime == Regime::Benchmark ? "benchmark" : "symbiosis";
}

double market_price(const MarketParams& m, double q) {
  return m.a() - m.b() * static_cast<double>(m.n()) * q;
}

double profit_at(double q, double p, const MarketParams& m, const SymbiosisTech& t, Regime regime) {
  const double dg = m.d() * m.g();
  if (regime == Regime::Benchmark) return q * (p - dg) - m.c() * q * q;
  const double unit_margin = p - dg * (1.0 - t.alpha()) + t.p_g() * t.alpha() * m.g();
  return q * unit_margin - m.c() * q * q - t.c_g();
}

double total_pollution(double q, const MarketParams& m, const SymbiosisTech& t, Regime regime) {
  const double gross = m.g() * static_cast<double>(m.n()) * q;
  if (regime == Regime::Benchmark) return gross;
  return (t.alpha() * t.k() + 1.0 - t.alpha()) * gross;
}

double consumer_surplus(double q, double p, const MarketParams& m) {
  return static_cast<double>(m.n()) * q * (m.a() - p) / 2.0;
}

}  // namespace symbiont

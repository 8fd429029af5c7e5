#include "symbiont/comparison.hpp"

#include "symbiont/equilibrium.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace symbiont {

namespace {

struct Shape {
  double n;
  double denom;   // 2c + bn
  double margin;  // a - dg
  double spread;  // d + p_g
  double gain;    // alpha*g*(d + p_g)
};

Shape shape_of(const MarketParams& m, const SymbiosisTech& t) {
  Shape s;
  s.n = static_cast<double>(m.n());
  s.denom = 2.0 * m.c() + m.b() * s.n;
  s.margin = m.a() - m.d() * m.g();
  s.spread = m.d() + t.p_g();
  s.gain = profitability_gain(m, t);
  return s;
}

// (A+G)^2 - A^2 = G(G + 2A) kept in factored form so its sign is exact.
double square_gap(const Shape& s) { return s.gain * (s.gain + 2.0 * s.margin); }

double gap_from(const Shape& s, double q_symb, const SymbiosisTech& t, double g) {
  const double dq = s.gain / s.denom;
  return g * s.n * (dq - q_symb * t.alpha() * (1.0 - t.k()));
}

}  // namespace

double pollution_gap(const MarketParams& m, const SymbiosisTech& t) {
  const Shape s = shape_of(m, t);
  return gap_from(s, symbiosis_equilibrium(m, t).q, t, m.g());
}

double sign_condition_margin(const MarketParams& m, const SymbiosisTech& t) {
  const Shape s = shape_of(m, t);
  if (!(s.spread > 0)) throw std::domain_error("sign condition undefined for d + p_g == 0");
  return (1.0 / (1.0 - t.k()) - t.alpha()) - s.margin / (m.g() * s.spread);
}

ComparisonReport compare(const MarketParams& m, const SymbiosisTech& t) {
  const Shape s = shape_of(m, t);
  const Equilibrium bench = benchmark_equilibrium(m);
  const Equilibrium symb = symbiosis_equilibrium(m, t);

  ComparisonReport r;
  r.gain_per_unit = s.gain;
  r.delta_q = s.gain / s.denom;
  r.delta_p = m.b() * s.n * s.gain / s.denom;
  r.delta_cs = m.b() * s.n * s.n * square_gap(s) / (2.0 * s.denom * s.denom);
  r.delta_pi = m.c() * square_gap(s) / (s.denom * s.denom);
  r.delta_pi_net = r.delta_pi - t.c_g();
  r.delta_ts = s.n * square_gap(s) / (2.0 * s.denom) - s.n * t.c_g();
  r.delta_poll = gap_from(s, symb.q, t, m.g());
  r.delta_poll_levels = symb.poll - bench.poll;
  r.ts_sufficient_condition = ts_sufficient_condition(m, t);

  r.poll_sign_lhs = 1.0 / (1.0 - t.k()) - t.alpha();
  r.degenerate_gain = !(s.spread > 0);
  r.poll_sign_rhs = r.degenerate_gain ? std::numeric_limits<double>::quiet_NaN()
                                      : s.margin / (m.g() * s.spread);

  const double scale = std::abs(bench.poll) + std::abs(symb.poll);
  r.poll_at_boundary = std::abs(r.delta_poll) <= 1e-12 * scale;
  r.poll_increases = !r.poll_at_boundary && r.delta_poll > 0;
  r.negative_symbiosis_poll = symb.poll < 0;
  return r;
}

bool ts_sufficient_condition(const MarketParams& m, const SymbiosisTech& t) {
  const Shape s = shape_of(m, t);
  return s.gain * m.c() > m.b() * s.n * s.margin;
}

bool poll_limit_k_to_one(const MarketParams& m, const SymbiosisTech& t) {
  for (const double eps : {1e-3, 1e-6}) {
    RawTech raw = t.raw();
    raw.k = 1.0 - eps;
    if (!(pollution_gap(m, validate_tech(raw)) > 0)) return false;
  }
  return true;
}

MarginSensitivities poll_sign_condition_sensitivities(const MarketParams& m, const SymbiosisTech& t) {
  const Shape s = shape_of(m, t);
  if (!(s.spread > 0)) throw std::domain_error("sign condition undefined for d + p_g == 0");
  const double g = m.g();
  const double one_minus_k = 1.0 - t.k();

  MarginSensitivities out;
  out.d_g = m.a() / (g * g * s.spread);
  out.d_d = (m.a() + g * t.p_g()) / (g * s.spread * s.spread);
  out.d_p_g = s.margin / (g * s.spread * s.spread);
  out.d_k = 1.0 / (one_minus_k * one_minus_k);
  out.d_alpha = -1.0;
  return out;
}

DeltaSensitivities delta_sensitivities(const MarketParams& m, const SymbiosisTech& t) {
  const Shape s = shape_of(m, t);
  const double g = m.g();
  const double alpha = t.alpha();
  const double bn = m.b() * s.n;

  // Partials of G and of A = a - dg along (alpha, d, p_g, g).
  const Partials dG{g * s.spread, alpha * g, alpha * g, alpha * s.spread};
  const Partials dA{0.0, -g, 0.0, -m.d()};

  // H = G(G + 2A): dH = 2(A + G) dG + 2G dA.
  const auto dH = [&](double gain_partial, double margin_partial) {
    return 2.0 * (s.margin + s.gain) * gain_partial + 2.0 * s.gain * margin_partial;
  };
  const Partials H{dH(dG.d_alpha, dA.d_alpha), dH(dG.d_d, dA.d_d), dH(dG.d_p_g, dA.d_p_g),
                   dH(dG.d_g, dA.d_g)};

  const auto scaled = [](const Partials& p, double f) {
    return Partials{p.d_alpha * f, p.d_d * f, p.d_p_g * f, p.d_g * f};
  };
  const double denom_sq = s.denom * s.denom;

  DeltaSensitivities out;
  out.q = scaled(dG, 1.0 / s.denom);
  out.p = scaled(dG, bn / s.denom);
  out.cs = scaled(H, m.b() * s.n * s.n / (2.0 * denom_sq));
  out.pi = scaled(H, m.c() / denom_sq);
  out.ts = scaled(H, s.n / (2.0 * s.denom));
  return out;
}

double quoted_profit_gap_d_partial(const MarketParams& m, const SymbiosisTech& t) {
  const Shape s = shape_of(m, t);
  const double g = m.g();
  return 2.0 * m.c() * t.alpha() * g * (s.margin + s.spread * (1.0 - g)) / (s.denom * s.denom);
}

}  // namespace symbiont

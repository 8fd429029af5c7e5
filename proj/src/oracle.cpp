#include "symbiont/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace symbiont {

void validate(const OracleConfig& cfg) {
  if (!(cfg.tol > 0) || !std::isfinite(cfg.tol)) throw std::invalid_argument("oracle tol must be > 0");
  if (cfg.max_iter <= 0) throw std::invalid_argument("oracle max_iter must be > 0");
  if (!(cfg.damping > 0 && cfg.damping <= 1)) throw std::invalid_argument("oracle damping must lie in (0, 1]");
  if (!(cfg.search_span > 0) || !std::isfinite(cfg.search_span))
    throw std::invalid_argument("oracle search_span must be > 0");
}

ScalarMaximum maximize_scalar(const std::function<double(double)>& f, double lo, double hi, double rel_width) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  ScalarMaximum out;
  const auto eval = [&](double x) {
    ++out.evaluations;
    return f(x);
  };

  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = eval(x1), f2 = eval(x2);
  const double stop = rel_width * (hi - lo);
  while (b - a > stop) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = eval(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = eval(x1);
    }
  }
  out.bracket_lo = a;
  out.bracket_hi = b;
  out.x = f1 >= f2 ? x1 : x2;
  out.value = std::max(f1, f2);

  // Parabolic polish. Wide spacing keeps the function differences far above
  // rounding noise, which golden-section alone cannot beat near a flat top.
  const double width = b - a;
  const double h = std::max(1e-3 * (hi - lo), 4.0 * width);
  const double xm = out.x, xl = xm - h, xr = xm + h;
  const double fm = out.value, fl = eval(xl), fr = eval(xr);
  const double curvature = fl + fr - 2.0 * fm;
  const double den = (xm - xl) * (fm - fr) - (xm - xr) * (fm - fl);
  if (curvature < 0 && den != 0) {
    const double num = (xm - xl) * (xm - xl) * (fm - fr) - (xm - xr) * (xm - xr) * (fm - fl);
    const double vertex = std::clamp(xm - 0.5 * num / den, lo, hi);
    if (vertex >= a - width && vertex <= b + width) {
      out.x = vertex;
      out.value = eval(vertex);
    }
  }
  return out;
}

namespace {

// Stand-in technology for benchmark-regime profit evaluations; its values are
// never read on that path.
const SymbiosisTech& inert_tech() {
  static const SymbiosisTech t = validate_tech({0.5, 0.0, 0.0, 0.0});
  return t;
}

double base_span(const MarketParams& m, const SymbiosisTech* t, const OracleConfig& cfg) {
  const double top_revenue = m.a() + (t ? t->alpha() * m.g() * t->p_g() : 0.0);
  return cfg.search_span * top_revenue / (m.b() * static_cast<double>(m.n()));
}

// Profit-maximizing quantity of a price taker at price p.
ScalarMaximum best_response(double p, const MarketParams& m, const SymbiosisTech& t, Regime regime,
                            double span) {
  const auto objective = [&](double q) { return profit_at(q, p, m, t, regime); };
  for (int expansions = 0;; ++expansions) {
    ScalarMaximum best = maximize_scalar(objective, 0.0, span);
    if (best.x < span * (1.0 - 1e-6) || expansions >= 60) return best;
    span *= 2.0;
  }
}

bool converged(double step, double q, double tol) { return std::abs(step) < tol * std::max(1.0, std::abs(q)); }

}  // namespace

OracleSolution fixed_point_equilibrium(const MarketParams& m, const std::optional<SymbiosisTech>& t,
                                       const OracleConfig& cfg) {
  validate(cfg);
  const Regime regime = t ? Regime::Symbiosis : Regime::Benchmark;
  const SymbiosisTech& tech = t ? *t : inert_tech();
  const double span = base_span(m, t ? &*t : nullptr, cfg);

  double q = 0.0;
  double damping = cfg.damping;
  double previous_gap = 0.0;
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    const double p = market_price(m, q);
    const double gap = best_response(p, m, tech, regime, span).x - q;
    // Alternating gaps mean the damped map overshoots; halve until it does not.
    // Gaps near the search noise floor are ignored.
    if (previous_gap * gap < 0 && std::abs(gap) > 1e6 * cfg.tol * std::max(1.0, std::abs(q)))
      damping *= 0.5;
    const double next = std::max(0.0, q + damping * gap);
    const double step = next - q;
    q = next;
    previous_gap = gap;
    if (!converged(step, q, cfg.tol)) continue;

    // The damped map contracts geometrically; keep going while steps still
    // shrink so the answer sits at the rounding floor, not just inside tol.
    double last_step = std::abs(step);
    for (int extra = 0; extra < 64; ++extra) {
      const double response = best_response(market_price(m, q), m, tech, regime, span).x;
      const double refined = std::max(0.0, q + damping * (response - q));
      const double refined_step = std::abs(refined - q);
      if (!(refined_step < 0.75 * last_step)) break;
      q = refined;
      last_step = refined_step;
    }
    return {q, market_price(m, q), iter, damping};
  }
  throw OracleError("NoConvergence: fixed point not reached within " + std::to_string(cfg.max_iter) +
                    " iterations");
}

double best_deviation_profit(const MarketParams& m, const SymbiosisTech& t, Profile profile,
                             const OracleConfig& cfg) {
  const bool from_benchmark = profile == Profile::AllBenchmark;
  const OracleSolution eq =
      fixed_point_equilibrium(m, from_benchmark ? std::nullopt : std::optional<SymbiosisTech>(t), cfg);
  const Regime deviant = from_benchmark ? Regime::Symbiosis : Regime::Benchmark;
  const double span = base_span(m, &t, cfg);
  return best_response(eq.p, m, t, deviant, span).value;
}

HeldDeviation held_quantity_deviation(const MarketParams& m, const SymbiosisTech& t, Profile profile,
                                      const OracleConfig& cfg) {
  const bool from_benchmark = profile == Profile::AllBenchmark;
  const OracleSolution eq =
      fixed_point_equilibrium(m, from_benchmark ? std::nullopt : std::optional<SymbiosisTech>(t), cfg);
  const Regime home = from_benchmark ? Regime::Benchmark : Regime::Symbiosis;
  const Regime deviant = from_benchmark ? Regime::Symbiosis : Regime::Benchmark;
  return {profit_at(eq.q, eq.p, m, t, home), profit_at(eq.q, eq.p, m, t, deviant)};
}

}  // namespace symbiont

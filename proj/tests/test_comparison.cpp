#include "doctest.h"

#include "support/test_support.hpp"
#include "symbiont/adoption.hpp"
#include "symbiont/comparison.hpp"
#include "symbiont/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

using namespace symbiont;
using symbiont::testing::derivative_agrees;
using symbiont::testing::draws;
using symbiont::testing::rel_diff;
using symbiont::testing::scenario_partial;
using symbiont::testing::with_value;

namespace {

// Gaps taken directly from the two equilibria.
struct LevelGaps {
  double q, p, cs, pi, ts, poll;
};

LevelGaps level_gaps(const Scenario& s) {
  const Equilibrium b = benchmark_equilibrium(s.market);
  const Equilibrium y = symbiosis_equilibrium(s.market, s.tech);
  return {y.q - b.q, b.p - y.p, y.cs - b.cs, y.gross_profit() - b.profit, y.ts - b.ts, y.poll - b.poll};
}

}  // namespace

TEST_CASE("compare at the reference scenario") {
  const Scenario s = reference_scenario();
  const ComparisonReport r = compare(s.market, s.tech);
  CHECK(rel_diff(r.delta_q, 2.0 / 3.0) < 1e-15);
  CHECK(rel_diff(r.delta_p, 8.0 / 3.0) < 1e-15);
  CHECK(rel_diff(r.delta_cs, 32.0 / 3.0) < 1e-15);
  CHECK(rel_diff(r.delta_pi, 4.0 / 3.0) < 1e-15);
  CHECK(rel_diff(r.delta_pi_net, 4.0 / 3.0 - 0.1) < 1e-15);
  CHECK(rel_diff(r.delta_ts, 15.6) < 1e-15);
  CHECK(std::abs(r.delta_poll) < 1e-15);
  CHECK(r.gain_per_unit == 4.0);
  CHECK(r.poll_sign_lhs == 0.5);
  CHECK(r.poll_sign_rhs == 0.5);
  CHECK(r.poll_at_boundary);
  CHECK_FALSE(r.poll_increases);
  CHECK_FALSE(r.degenerate_gain);
  CHECK_FALSE(r.ts_sufficient_condition);
}

TEST_CASE("pollution direction away from the crossing") {
  const Scenario s = reference_scenario();
  const Scenario rich = with_value(s, "p_g", 20.0);
  const ComparisonReport up = compare(rich.market, rich.tech);
  CHECK(up.poll_increases);
  CHECK(up.delta_poll > 0);

  const Scenario poor = with_value(s, "p_g", 0.0);
  const ComparisonReport down = compare(poor.market, poor.tech);
  CHECK_FALSE(down.poll_increases);
  CHECK(down.delta_poll < 0);
}

TEST_CASE("ts_sufficient_condition") {
  const Scenario s = reference_scenario();
  CHECK_FALSE(ts_sufficient_condition(s.market, s.tech));
  const Scenario costly = with_value(s, "c", 20.0);
  CHECK(ts_sufficient_condition(costly.market, costly.tech));
}

TEST_CASE("degenerate gain and negative pollution flags") {
  const Scenario s = reference_scenario();
  const Scenario flat = with_value(with_value(s, "d", 0.0), "p_g", 0.0);
  const ComparisonReport r = compare(flat.market, flat.tech);
  CHECK(r.degenerate_gain);
  CHECK(std::isnan(r.poll_sign_rhs));
  CHECK_FALSE(r.poll_increases);
  CHECK(r.delta_q == 0.0);
  CHECK_THROWS_AS(sign_condition_margin(flat.market, flat.tech), std::domain_error);
  CHECK_THROWS_AS(poll_sign_condition_sensitivities(flat.market, flat.tech), std::domain_error);

  const Scenario rebound = with_value(s, "k", -3.0);
  CHECK(compare(rebound.market, rebound.tech).negative_symbiosis_poll);
  CHECK_FALSE(compare(s.market, s.tech).negative_symbiosis_poll);
}

TEST_CASE("margin sensitivities at the reference scenario") {
  const Scenario s = reference_scenario();
  CHECK(std::abs(sign_condition_margin(s.market, s.tech)) < 1e-15);
  const MarginSensitivities d = poll_sign_condition_sensitivities(s.market, s.tech);
  CHECK(rel_diff(d.d_g, 9.0 / 4.0) < 1e-15);
  CHECK(rel_diff(d.d_d, 3.0 / 32.0) < 1e-15);
  CHECK(rel_diff(d.d_p_g, 1.0 / 32.0) < 1e-15);
  CHECK(d.d_k == 1.0);
  CHECK(d.d_alpha == -1.0);
}

TEST_CASE("gap partials at the reference scenario") {
  const Scenario s = reference_scenario();
  const DeltaSensitivities d = delta_sensitivities(s.market, s.tech);
  CHECK(rel_diff(d.q.d_alpha, 4.0 / 3.0) < 1e-15);
  CHECK(std::abs(d.pi.d_d) < 1e-15);
  CHECK(rel_diff(quoted_profit_gap_d_partial(s.market, s.tech), 1.0 / 6.0) < 1e-15);

  const auto pi_gap = [](const Scenario& x) { return level_gaps(x).pi; };
  CHECK(std::abs(scenario_partial(s, "d", pi_gap)) < 1e-8);
}

TEST_CASE("gap partials in d turn negative at low effectiveness") {
  const Scenario s = with_value(reference_scenario(), "alpha", 0.1);
  const DeltaSensitivities d = delta_sensitivities(s.market, s.tech);
  CHECK(d.q.d_d > 0);
  CHECK(d.p.d_d > 0);
  CHECK(d.cs.d_d < 0);
  CHECK(d.pi.d_d < 0);
  CHECK(d.ts.d_d < 0);
  CHECK(quoted_profit_gap_d_partial(s.market, s.tech) > 0);

  const auto cs_gap = [](const Scenario& x) { return level_gaps(x).cs; };
  CHECK(scenario_partial(s, "d", cs_gap) < 0);
  CHECK(delta_sensitivities(s.market, s.tech).cs.d_g < 0);
}

TEST_CASE("gap partials match finite differences over random draws") {
  using Field = double LevelGaps::*;
  using Slot = Partials DeltaSensitivities::*;
  const std::pair<Field, Slot> gaps[] = {{&LevelGaps::q, &DeltaSensitivities::q},
                                         {&LevelGaps::p, &DeltaSensitivities::p},
                                         {&LevelGaps::cs, &DeltaSensitivities::cs},
                                         {&LevelGaps::pi, &DeltaSensitivities::pi},
                                         {&LevelGaps::ts, &DeltaSensitivities::ts}};
  for (const Scenario& s : draws(500, 31)) {
    const DeltaSensitivities d = delta_sensitivities(s.market, s.tech);
    const Equilibrium y = symbiosis_equilibrium(s.market, s.tech);
    // scale of the levels the gaps are differenced from
    const double scale = std::abs(y.ts) + std::abs(y.p) + y.cs + std::abs(y.gross_profit()) + y.q + 1.0;
    for (const auto& [field, slot] : gaps) {
      const auto gap = [field](const Scenario& x) { return level_gaps(x).*field; };
      const Partials& p = d.*slot;
      CHECK(derivative_agrees(p.d_alpha, scenario_partial(s, "alpha", gap), scale, s.tech.alpha()));
      CHECK(derivative_agrees(p.d_g, scenario_partial(s, "g", gap), scale, s.market.g()));
      if (s.market.d() > 1e-3) CHECK(derivative_agrees(p.d_d, scenario_partial(s, "d", gap), scale, s.market.d()));
      if (s.tech.p_g() > 1e-3)
        CHECK(derivative_agrees(p.d_p_g, scenario_partial(s, "p_g", gap), scale, s.tech.p_g()));
    }
  }
}

TEST_CASE("margin sensitivities match finite differences and signs") {
  const auto margin = [](const Scenario& x) { return sign_condition_margin(x.market, x.tech); };
  for (const Scenario& s : draws(500, 37)) {
    if (s.market.d() + s.tech.p_g() == 0) continue;
    const MarginSensitivities d = poll_sign_condition_sensitivities(s.market, s.tech);
    CHECK(d.d_g > 0);
    CHECK(d.d_d > 0);
    CHECK(d.d_p_g > 0);
    CHECK(d.d_k > 0);
    CHECK(d.d_alpha < 0);
    const double scale = std::abs(margin(s)) + std::abs(compare(s.market, s.tech).poll_sign_rhs) + 1.0;
    CHECK(derivative_agrees(d.d_g, scenario_partial(s, "g", margin), scale, s.market.g()));
    CHECK(derivative_agrees(d.d_alpha, scenario_partial(s, "alpha", margin), scale, s.tech.alpha()));
    CHECK(derivative_agrees(d.d_k, scenario_partial(s, "k", margin), scale, std::abs(s.tech.k()) + 1.0));
    if (s.market.d() > 1e-3) CHECK(derivative_agrees(d.d_d, scenario_partial(s, "d", margin), scale, s.market.d()));
    if (s.tech.p_g() > 1e-3)
      CHECK(derivative_agrees(d.d_p_g, scenario_partial(s, "p_g", margin), scale, s.tech.p_g()));
  }
}

TEST_CASE("comparison properties over random draws") {
  for (const Scenario& s : draws(1000, 41)) {
    const ComparisonReport r = compare(s.market, s.tech);
    const LevelGaps lv = level_gaps(s);
    const Equilibrium b = benchmark_equilibrium(s.market);
    const Equilibrium y = symbiosis_equilibrium(s.market, s.tech);
    const double g = profitability_gain(s.market, s.tech);
    const double n = static_cast<double>(s.market.n());
    const double denom = 2.0 * s.market.c() + s.market.b() * n;

    // gap formulas agree with level differences
    CHECK(std::abs(r.delta_q - lv.q) <= 1e-12 * (y.q + b.q));
    CHECK(std::abs(r.delta_p - lv.p) <= 1e-12 * (std::abs(y.p) + std::abs(b.p)));
    CHECK(std::abs(r.delta_cs - lv.cs) <= 1e-12 * (y.cs + b.cs));
    CHECK(std::abs(r.delta_pi - lv.pi) <= 1e-12 * (std::abs(y.gross_profit()) + b.profit));
    CHECK(std::abs(r.delta_ts - lv.ts) <= 1e-12 * (std::abs(y.ts) + b.ts));
    CHECK(std::abs(r.delta_poll - r.delta_poll_levels) <= 1e-12 * (std::abs(y.poll) + b.poll));

    if (g > 0) {
      CHECK(r.delta_q > 0);
      CHECK(r.delta_p > 0);
      CHECK(r.delta_cs > 0);
      CHECK(r.delta_pi > 0);
      // the consumer-surplus gap exceeds the expression without the cross term
      const double without_cross = s.market.b() * (n * g) * (n * g) / (2.0 * denom * denom);
      CHECK(r.delta_cs > without_cross);
      CHECK(poll_limit_k_to_one(s.market, s.tech));
      if (s.tech.c_g() < cutoff_star(s.market, s.tech) && r.ts_sufficient_condition) {
        CHECK(r.delta_pi_net > 0);
        CHECK(r.delta_ts > 0);
      }
    }

    // sign of the pollution gap follows the sign condition
    if (!r.degenerate_gain && !r.poll_at_boundary) {
      const double margin = sign_condition_margin(s.market, s.tech);
      if (std::abs(margin) > 1e-9 * (std::abs(r.poll_sign_lhs) + std::abs(r.poll_sign_rhs)))
        CHECK((r.delta_poll_levels > 0) == (margin > 0));
      CHECK(r.poll_increases == (r.delta_poll > 0));
    }
  }
}

TEST_CASE("pollution gap crosses zero at most once in p_g") {
  for (const Scenario& s : draws(200, 43)) {
    int changes = 0;
    double last = 0;
    for (int i = 0; i <= 200; ++i) {
      const Scenario t = with_value(s, "p_g", 0.2 * i);
      if (s.market.d() == 0 && i == 0) continue;
      const double gap = pollution_gap(t.market, t.tech);
      if (gap == 0) continue;
      if (last != 0 && (gap > 0) != (last > 0)) ++changes;
      last = gap;
    }
    CHECK(changes <= 1);
  }
}

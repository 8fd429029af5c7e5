#pragma once

// Test-only helpers: finite differences, relative comparisons and seeded
// scenario draws. Nothing here calls an equilibrium closed form.

#include "symbiont/params.hpp"
#include "symbiont/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace symbiont::testing {

inline double rel_diff(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0 ? 0.0 : std::abs(x - y) / scale;
}

/// Central difference of f at x with step rel_step*|x| (or rel_step when x == 0).
inline double central_difference(const std::function<double(double)>& f, double x, double rel_step = 1e-6) {
  const double h = x == 0 ? rel_step : rel_step * std::abs(x);
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Finite difference of a scenario-valued quantity along one parameter.
/// n must stay integral under validation, so it cannot be passed here.
inline double scenario_partial(const Scenario& s, std::string_view key,
                               const std::function<double(const Scenario&)>& quantity, double rel_step = 1e-6) {
  const auto along = [&](double v) {
    ScenarioValues values = s.values();
    values.at(key) = v;
    return quantity(validate_scenario(values));
  };
  return central_difference(along, s.values().at(key), rel_step);
}

/// Agreement of an analytic derivative with its finite-difference estimate:
/// relative 1e-6, or an absolute floor of 1e-9 * |f|/|x| below which rounding
/// in the difference quotient dominates.
inline bool derivative_agrees(double analytic, double fd, double f_value, double x, double tol = 1e-6) {
  const double floor = 1e-9 * std::abs(f_value) / std::max(std::abs(x), 1e-12);
  return std::abs(analytic - fd) <= std::max(tol * std::max(std::abs(analytic), std::abs(fd)), floor);
}

inline Scenario with_value(const Scenario& s, std::string_view key, double value) {
  ScenarioValues v = s.values();
  v.at(key) = value;
  return validate_scenario(v);
}

inline std::vector<Scenario> draws(std::size_t count, std::uint64_t seed) {
  std::vector<Scenario> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng = draw_rng(seed, i);
    out.push_back(random_scenario(rng));
  }
  return out;
}

}  // namespace symbiont::testing

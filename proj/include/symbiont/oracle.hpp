#pragma once

// Brute-force equilibrium and deviation computations. Everything here is built
// from the model primitives (demand and per-firm profit) plus derivative-free
// scalar search; no equilibrium closed form is consulted.

#include "symbiont/params.hpp"
#include "symbiont/primitives.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

namespace symbiont {

struct OracleConfig {
  /// Convergence tolerance on per-firm quantity; absolute for |q| <= 1,
  /// relative above. Once inside it, iteration continues while steps keep
  /// shrinking, so results usually land well below tol.
  double tol = 1e-12;
  int max_iter = 10'000;
  /// Initial fixed-point damping; halved whenever successive best-response
  /// gaps alternate in sign.
  double damping = 0.5;
  /// Search interval for best responses is [0, search_span * (a + alpha*g*p_g)/(b*n)],
  /// doubled whenever the maximizer sits on the upper end.
  double search_span = 10.0;
};

/// Throws std::invalid_argument if any field is out of range.
void validate(const OracleConfig& cfg);

class OracleError : public std::runtime_error {
 public:
  explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

struct ScalarMaximum {
  double x = 0;
  double value = 0;
  double bracket_lo = 0;  // final golden-section bracket
  double bracket_hi = 0;
  int evaluations = 0;
};

/// Maximizes a unimodal f on [lo, hi]: golden-section narrowing to
/// `rel_width`*(hi - lo), then one successive-parabolic-interpolation step
/// through three widely spaced points (exact for quadratic objectives).
/// The result is clipped to [lo, hi].
ScalarMaximum maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                              double rel_width = 1e-7);

struct OracleSolution {
  double q = 0;
  double p = 0;
  int iterations = 0;
  double damping = 0;  // damping in force at convergence
};

/// Damped best-response iteration for a symmetric price-taking market.
/// Passing no technology solves the benchmark regime. Throws OracleError when
/// max_iter is exhausted.
OracleSolution fixed_point_equilibrium(const MarketParams& m, const std::optional<SymbiosisTech>& t,
                                       const OracleConfig& cfg = {});

enum class Profile { AllBenchmark, AllSymbiosis };

/// Holds the market price at the profile's numeric equilibrium and lets one
/// firm re-optimize its quantity in the opposite regime. Returns that firm's
/// maximal profit.
double best_deviation_profit(const MarketParams& m, const SymbiosisTech& t, Profile profile,
                             const OracleConfig& cfg = {});

struct HeldDeviation {
  double stay_profit = 0;
  double deviate_profit = 0;
};

/// Switches one firm's regime at the profile's numeric equilibrium while it
/// keeps producing the equilibrium quantity at the equilibrium price.
HeldDeviation held_quantity_deviation(const MarketParams& m, const SymbiosisTech& t, Profile profile,
                                      const OracleConfig& cfg = {});

}  // namespace symbiont

#pragma once

// Model primitives: demand, per-firm profit, pollution and consumer surplus
// evaluated at arbitrary (quantity, price) points. Nothing here assumes an
// equilibrium, so the numeric oracle can build on these alone.

#include "symbiont/params.hpp"

#include <string_view>

namespace symbiont {

enum class Regime { Benchmark, Symbiosis };

std::string_view to_string(Regime regime);

/// Inverse demand at symmetric per-firm output q: p = a - b*n*q.
double market_price(const MarketParams& m, double q);

/// Per-firm profit of a price-taking firm producing q at price p.
/// Benchmark: q(p - dg) - cq^2.
/// Symbiosis: q(p - dg(1-alpha) + p_g*alpha*g) - cq^2 - c_g.
double profit_at(double q, double p, const MarketParams& m, const SymbiosisTech& t, Regime regime);

/// Total market pollution at symmetric per-firm output q.
/// Benchmark: g*n*q. Symbiosis: (alpha*k + 1 - alpha)*g*n*q.
double total_pollution(double q, const MarketParams& m, const SymbiosisTech& t, Regime regime);

/// Consumer surplus Q(a - p)/2 with Q = n*q.
double consumer_surplus(double q, double p, const MarketParams& m);

}  // namespace symbiont

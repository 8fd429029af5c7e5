#pragma once

#include "symbiont/adoption.hpp"
#include "symbiont/equilibrium.hpp"
#include "symbiont/oracle.hpp"
#include "symbiont/params.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace symbiont {

/// One closed-form vs oracle comparison. Boolean checks store 0/1 in
/// `closed_form` and the oracle's profit difference in `oracle`.
struct CheckResult {
  std::string name;
  bool passed = false;
  double closed_form = 0;
  double oracle = 0;
  double abs_error = 0;
  double rel_error = 0;
  double tolerance = 0;
};

struct VerificationRecord {
  ScenarioValues scenario;
  std::vector<CheckResult> checks;
  std::string error;  // set when the oracle itself failed

  bool passed() const;
};

/// Everything the verifier compares against, bundled so tests can feed in a
/// deliberately corrupted copy.
struct ClosedForm {
  Equilibrium benchmark;
  Equilibrium symbiosis;
  AdoptionAnalysis adoption;
};

ClosedForm closed_form(const Scenario& s);

/// Relative error with a unit floor on the denominator, so values near zero
/// are judged on absolute error.
double scaled_error(double value, double reference);

VerificationRecord verify_against(const Scenario& s, const ClosedForm& expected, const OracleConfig& cfg = {},
                                  double tolerance = 1e-9);

VerificationRecord verify_scenario(const Scenario& s, const OracleConfig& cfg = {}, double tolerance = 1e-9);

/// Deterministic per-draw generator: draw i of a campaign seeded with `seed`
/// depends on (seed, i) only.
std::mt19937_64 draw_rng(std::uint64_t seed, std::uint64_t index);

/// A random valid scenario with a - dg >= 0.1a, and c_g spread over
/// [0, 1.2 * cutoff_prime] so both cutoff regions are well populated.
Scenario random_scenario(std::mt19937_64& rng);

struct CampaignSummary {
  std::size_t draws = 0;
  std::size_t passed = 0;
  std::vector<VerificationRecord> records;  // in draw order
};

/// Verifies `draws` random scenarios in parallel. `threads` == 0 picks
/// the default worker count.
CampaignSummary run_campaign(std::size_t draws, std::uint64_t seed, const OracleConfig& cfg = {},
                             unsigned threads = 0);

}  // namespace symbiont

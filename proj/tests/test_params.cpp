#include "doctest.h"

#include "support/test_support.hpp"
#include "symbiont/io.hpp"
#include "symbiont/params.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <random>

using namespace symbiont;

namespace {

ParamErrorKind market_error(RawMarket raw) {
  try {
    validate_market(raw);
  } catch (const ParamError& e) {
    return e.kind();
  }
  FAIL("expected a ParamError");
  return ParamErrorKind::UnknownKey;
}

ParamErrorKind tech_error(RawTech raw) {
  try {
    validate_tech(raw);
  } catch (const ParamError& e) {
    return e.kind();
  }
  FAIL("expected a ParamError");
  return ParamErrorKind::UnknownKey;
}

}  // namespace

TEST_CASE("validate_market accepts the reference market") {
  const MarketParams m = validate_market({9, 1, 1, 4, 10, 0.5});
  CHECK(m.a() == 9);
  CHECK(m.n() == 4);
  CHECK(m.a() - m.d() * m.g() == doctest::Approx(4.0));
}

TEST_CASE("validate_market rejects each violated invariant by name") {
  CHECK(market_error({5, 1, 1, 2, 10, 0.5}) == ParamErrorKind::MarketViability);
  CHECK(market_error({9, 1, 1, 4, 10, 1.2}) == ParamErrorKind::PollutionShareOutOfRange);
  CHECK(market_error({9, 1, 1, 4, 10, 0.0}) == ParamErrorKind::PollutionShareOutOfRange);
  CHECK(market_error({9, 1, 1, 4, 10, 1.0}) == ParamErrorKind::PollutionShareOutOfRange);
  CHECK(market_error({0, 1, 1, 4, 0, 0.5}) == ParamErrorKind::NonPositiveParameter);
  CHECK(market_error({9, -1, 1, 4, 0, 0.5}) == ParamErrorKind::NonPositiveParameter);
  CHECK(market_error({9, 1, 0, 4, 0, 0.5}) == ParamErrorKind::NonPositiveParameter);
  CHECK(market_error({9, 1, 1, 0, 0, 0.5}) == ParamErrorKind::NonPositiveParameter);
  CHECK(market_error({9, 1, 1, 2.5, 0, 0.5}) == ParamErrorKind::NonIntegerFirmCount);
  CHECK(market_error({9, 1, 1, 4, -1, 0.5}) == ParamErrorKind::NegativeTaxRate);
  CHECK(market_error({std::nan(""), 1, 1, 4, 0, 0.5}) == ParamErrorKind::NonFiniteParameter);

  try {
    validate_market({5, 1, 1, 2, 10, 0.5});
  } catch (const ParamError& e) {
    CHECK(std::string(e.what()).find("MarketViability") != std::string::npos);
  }
}

TEST_CASE("d = 0 is a legitimate no-tax market") {
  CHECK_NOTHROW(validate_market({9, 1, 1, 4, 0, 0.5}));
}

TEST_CASE("validate_tech") {
  CHECK_NOTHROW(validate_tech({0.5, 0, 6, 0.1}));
  CHECK_NOTHROW(validate_tech({0.5, -0.3, 6, 0.1}));
  CHECK_NOTHROW(validate_tech({0.5, -250.0, 0, 0}));
  CHECK(tech_error({1.0, 0, 6, 0.1}) == ParamErrorKind::AlphaOutOfRange);
  CHECK(tech_error({0.0, 0, 6, 0.1}) == ParamErrorKind::AlphaOutOfRange);
  CHECK(tech_error({0.5, 1.0, 6, 0.1}) == ParamErrorKind::KOutOfRange);
  CHECK(tech_error({0.5, 0, -1, 0.1}) == ParamErrorKind::NegativePrice);
  CHECK(tech_error({0.5, 0, 6, -0.1}) == ParamErrorKind::NegativeCost);
  CHECK(tech_error({0.5, std::numeric_limits<double>::infinity(), 6, 0.1}) == ParamErrorKind::NonFiniteParameter);
}

TEST_CASE("validation is total over arbitrary finite tuples") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> wide(-50.0, 50.0);
  int accepted = 0;
  for (int i = 0; i < 20000; ++i) {
    ScenarioValues v;
    for (const auto key : ScenarioValues::keys) v.at(key) = wide(rng);
    if (i % 3 == 0) v.n = std::round(std::abs(v.n)) + 1;
    if (i % 5 == 0) v.g = std::abs(v.g) / 60.0;
    if (i % 5 == 0) v.alpha = std::abs(v.alpha) / 60.0;
    try {
      validate_scenario(v);
      ++accepted;
    } catch (const ParamError&) {
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("scenario JSON round trip is bit exact") {
  for (const Scenario& s : testing::draws(200, 3)) {
    const nlohmann::json doc = to_json(s.values());
    const Scenario back = parse_scenario(doc.dump());
    const ScenarioValues x = s.values(), y = back.values();
    for (const auto key : ScenarioValues::keys) {
      const double lhs = x.at(key), rhs = y.at(key);
      CHECK(std::memcmp(&lhs, &rhs, sizeof lhs) == 0);
    }
    CHECK(back == s);
  }
}

TEST_CASE("scenario documents need exactly the ten keys") {
  nlohmann::json doc = to_json(reference_values());
  CHECK_NOTHROW(scenario_from_json(doc));

  nlohmann::json missing = doc;
  missing.erase("p_g");
  try {
    scenario_from_json(missing);
    FAIL("missing key accepted");
  } catch (const ParamError& e) {
    CHECK(e.kind() == ParamErrorKind::MissingKey);
    CHECK(e.field() == "p_g");
  }

  nlohmann::json extra = doc;
  extra["beta"] = 1.0;
  try {
    scenario_from_json(extra);
    FAIL("unknown key accepted");
  } catch (const ParamError& e) {
    CHECK(e.kind() == ParamErrorKind::UnknownKey);
    CHECK(e.field() == "beta");
  }

  CHECK_THROWS_AS(parse_scenario("{not json"), ParamError);
  nlohmann::json text_value = doc;
  text_value["a"] = "nine";
  CHECK_THROWS_AS(scenario_from_json(text_value), ParamError);
}

#include <cmath>

#include "doctest.h"
#include "endofair/errors.hpp"
#include "endofair/survivor.hpp"
#include "support/oracles.hpp"

using endofair::Curvature;
using endofair::fosd_check;
using endofair::InfeasibleError;
using endofair::InvalidScenario;
using endofair::SurvivorFunction;

TEST_CASE("normal survivor matches an independent series cdf") {
  const auto h = SurvivorFunction::normal(0.3, 2.0);
  for (const double x : {-4.0, -1.0, 0.0, 0.3829249225480262, 1.5, 5.0})
    CHECK(std::fabs(h.value(x) - testsupport::norm_sf((x - 0.3) / 2.0)) <= 1e-12);
}

TEST_CASE("logistic survivor matches its closed form") {
  const auto h = SurvivorFunction::logistic(-0.5, 1.5);
  for (const double x : {-6.0, -0.5, 0.0, 2.0, 9.0})
    CHECK(std::fabs(h.value(x) - 1.0 / (1.0 + std::exp((x + 0.5) / 1.5))) <= 1e-13);
}

TEST_CASE("power survivor is flat outside its unit span") {
  const auto h = SurvivorFunction::power(-0.3, 2.0);
  CHECK(h.value(-0.5) == 1.0);
  CHECK(h.value(-0.3) == 1.0);
  CHECK(h.value(0.7) == 0.0);
  CHECK(h.value(1.0) == 0.0);
  CHECK(std::fabs(h.value(0.2) - std::pow(0.5, 2.0)) <= 1e-14);
  CHECK(h.span_lo() == -0.3);
  CHECK(h.span_hi() == doctest::Approx(0.7));
}

TEST_CASE("inverse undoes value on the decreasing span") {
  const SurvivorFunction hs[] = {
      SurvivorFunction::normal(0.0, 2.0),
      SurvivorFunction::logistic(1.0, 0.7),
      SurvivorFunction::power(-0.4, 0.5),
  };
  for (const auto& h : hs) {
    // Levels near 0 and 1 are ill-conditioned to invert (the 1-c rounding
    // alone moves deep-tail preimages), so probe by level, not span edge.
    for (int i = 1; i < 20; ++i) {
      const double c = i / 20.0;
      CHECK(std::fabs(h.value(h.inverse(c)) - c) <= 1e-12);
    }
    const double lo = h.span_lo();
    const double hi = h.span_hi();
    for (int i = 4; i <= 6; ++i) {
      const double x = lo + (hi - lo) * i / 10.0;
      CHECK(std::fabs(h.inverse(h.value(x)) - x) <= 1e-8);
    }
  }
}

TEST_CASE("inverse rejects levels outside the image") {
  const auto n = SurvivorFunction::normal(0.0, 1.0);
  CHECK_THROWS_AS(n.inverse(0.0), InfeasibleError);
  CHECK_THROWS_AS(n.inverse(1.0), InfeasibleError);
  CHECK_THROWS_AS(n.inverse(-0.1), InfeasibleError);
  CHECK_THROWS_AS(n.inverse(1.1), InfeasibleError);

  const auto p = SurvivorFunction::power(0.0, 2.0);
  CHECK(p.inverse(0.0) == doctest::Approx(1.0));
  CHECK(p.inverse(1.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(p.inverse(1.0 + 1e-9), InfeasibleError);
}

TEST_CASE("curvature classification follows the second derivative sign") {
  const auto n = SurvivorFunction::normal(0.5, 1.0);
  CHECK(n.curvature_on(0.5, 3.0) == Curvature::convex);
  CHECK(n.curvature_on(-3.0, 0.5) == Curvature::concave);
  CHECK(n.curvature_on(-1.0, 1.0) == Curvature::mixed);

  const auto lg = SurvivorFunction::logistic(0.0, 1.0);
  CHECK(lg.curvature_on(0.1, 4.0) == Curvature::convex);
  CHECK(lg.curvature_on(-4.0, -0.1) == Curvature::concave);

  CHECK(SurvivorFunction::power(0.0, 2.0).curvature_on(0.1, 0.9) == Curvature::convex);
  CHECK(SurvivorFunction::power(0.0, 0.5).curvature_on(0.1, 0.9) == Curvature::concave);
  CHECK(SurvivorFunction::power(0.0, 1.0).curvature_on(0.1, 0.9) == Curvature::linear);
  // Touching a flat flank spoils the classification.
  CHECK(SurvivorFunction::power(0.0, 2.0).curvature_on(-0.1, 0.5) == Curvature::mixed);
  CHECK(SurvivorFunction::power(0.0, 2.0).curvature_on(0.5, 1.1) == Curvature::mixed);
}

TEST_CASE("curvature sign agrees with finite differences") {
  const auto h = SurvivorFunction::normal(0.0, 2.0);
  const double d = 1e-4;
  for (const double x : {0.5, 1.0, 3.0}) {
    const double second = (h.value(x + d) - 2.0 * h.value(x) + h.value(x - d)) / (d * d);
    CHECK(second > 0.0);  // convex side
  }
  for (const double x : {-3.0, -0.5}) {
    const double second = (h.value(x + d) - 2.0 * h.value(x) + h.value(x - d)) / (d * d);
    CHECK(second < 0.0);  // concave side
  }
}

TEST_CASE("stochastic dominance check orders shifted benefit curves") {
  const auto low = SurvivorFunction::normal(0.0, 2.0);
  const auto high = SurvivorFunction::normal(2.0, 2.0);
  CHECK(fosd_check(low, high));
  CHECK_FALSE(fosd_check(high, low));
  CHECK(fosd_check(low, low));

  CHECK(fosd_check(SurvivorFunction::power(-0.5, 2.0), SurvivorFunction::power(-0.2, 2.0)));
  // Crossing curves are ordered in neither direction.
  const auto narrow = SurvivorFunction::normal(0.0, 0.5);
  const auto broad = SurvivorFunction::normal(0.0, 3.0);
  CHECK_FALSE(fosd_check(narrow, broad));
  CHECK_FALSE(fosd_check(broad, narrow));
}

TEST_CASE("survivor constructors reject degenerate parameters") {
  CHECK_THROWS_AS(SurvivorFunction::normal(0.0, 0.0), InvalidScenario);
  CHECK_THROWS_AS(SurvivorFunction::logistic(0.0, -1.0), InvalidScenario);
  CHECK_THROWS_AS(SurvivorFunction::power(0.0, 0.0), InvalidScenario);
}

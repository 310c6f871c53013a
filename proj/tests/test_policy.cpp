#include <cmath>

#include "doctest.h"
#include "endofair/policy.hpp"
#include "endofair/scenario.hpp"
#include "support/oracles.hpp"

using namespace endofair;
using testsupport::norm_cdf;
using testsupport::norm_sf;

TEST_CASE("group metrics at the density crossing match hand-computed values") {
  const Scenario sc = scenarios::a();
  const ThresholdPolicy pol{{0.5, 0.5}};
  const auto ms = group_metrics(sc, pol);

  const double tpr = norm_cdf(0.5);        // 1 - F_crime(0.5), unit normal shifted by 1
  const double fpr = norm_sf(0.5);         // 1 - F_innocent(0.5)
  const double dbar = tpr - fpr;
  const double cr1 = norm_sf(dbar / 2.0);          // benefit curve N(0, 2)
  const double cr2 = norm_sf((dbar - 2.0) / 2.0);  // benefit curve N(2, 2)

  for (int g = 0; g < 2; ++g) {
    CHECK(std::fabs(ms[g].tpr - tpr) <= 1e-12);
    CHECK(std::fabs(ms[g].fpr - fpr) <= 1e-12);
    CHECK(ms[g].tpr + ms[g].fnr == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ms[g].delta == doctest::Approx(ms[g].tpr - ms[g].fpr).epsilon(1e-15));
  }
  CHECK(std::fabs(ms[0].crime_rate - cr1) <= 1e-11);
  CHECK(std::fabs(ms[1].crime_rate - cr2) <= 1e-11);
  CHECK(std::fabs(ms[0].crime_rate - 0.424081644011) <= 1e-9);
  CHECK(std::fabs(ms[1].crime_rate - 0.790609397375) <= 1e-9);

  const double ppv1 = cr1 * tpr / (cr1 * tpr + (1.0 - cr1) * fpr);
  const double ppv2 = cr2 * tpr / (cr2 * tpr + (1.0 - cr2) * fpr);
  REQUIRE(ms[0].ppv.has_value());
  REQUIRE(ms[1].ppv.has_value());
  CHECK(std::fabs(*ms[0].ppv - ppv1) <= 1e-11);
  CHECK(std::fabs(*ms[1].ppv - ppv2) <= 1e-11);

  CHECK(std::fabs(total_crime(sc, pol) - (1000.0 * cr1 + 1000.0 * cr2)) <= 1e-8);
  CHECK(std::fabs(total_crime(sc, pol) - 1214.69104139) <= 1e-6);
}

TEST_CASE("posterior at the threshold equals the crime rate when densities cross there") {
  // At the deterrence peak the two signal densities are equal, so Bayes'
  // rule collapses to the base rate.
  const Scenario sc = scenarios::a();
  const ThresholdPolicy pol{{0.5, 0.5}};
  const auto ms = group_metrics(sc, pol);
  for (int g = 0; g < 2; ++g) {
    REQUIRE(ms[g].posterior_threshold.has_value());
    CHECK(std::fabs(*ms[g].posterior_threshold - ms[g].crime_rate) <= 1e-9);
  }

  // Off the peak the two part ways.
  const auto off = group_metrics(sc, ThresholdPolicy{{1.4, 1.4}});
  CHECK(std::fabs(*off[0].posterior_threshold - off[0].crime_rate) > 1e-3);
}

TEST_CASE("posterior is monotone in the signal") {
  const Scenario sc = scenarios::b();
  const ThresholdPolicy pol{{0.5, 1.0}};
  for (std::size_t g = 0; g < 2; ++g) {
    double prev = -1.0;
    for (double s = -3.0; s <= 4.0; s += 0.25) {
      const double p = posterior(sc, pol, g, s);
      CHECK(p >= prev - 1e-12);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      prev = p;
    }
  }
}

TEST_CASE("ppv is undefined when the policy flags nobody") {
  const Scenario sc = scenarios::a();
  const auto m = metrics_for(sc.group(0), 40.0);
  CHECK_FALSE(m.ppv.has_value());
  CHECK(m.tpr == doctest::Approx(0.0));
  CHECK(m.fpr == doctest::Approx(0.0));
  CHECK(m.delta == doctest::Approx(0.0));
  // No deterrence: the whole upper benefit tail acts.
  CHECK(std::fabs(m.crime_rate - norm_sf(0.0)) <= 1e-12);
}

TEST_CASE("per-group metrics agree with the batched call") {
  const Scenario sc = scenarios::c();
  const ThresholdPolicy pol{{0.75, 0.25}};
  const auto batch = group_metrics(sc, pol);
  for (std::size_t g = 0; g < 2; ++g) {
    const auto one = metrics_for(sc.group(g), pol.thresholds[g]);
    CHECK(one.tpr == batch[g].tpr);
    CHECK(one.fpr == batch[g].fpr);
    CHECK(one.crime_rate == batch[g].crime_rate);
  }
  // Mirrored two-piece signals: equal deterrence, very different error rates.
  CHECK(std::fabs(batch[0].delta - batch[1].delta) <= 1e-12);
  CHECK(std::fabs(batch[0].fpr - 0.4628063081) <= 1e-9);
  CHECK(std::fabs(batch[1].fpr - 0.1542687694) <= 1e-9);
}

TEST_CASE("total crime responds to thresholds through deterrence") {
  const Scenario sc = scenarios::a();
  const double at_peak = total_crime(sc, ThresholdPolicy{{0.5, 0.5}});
  const double off_peak = total_crime(sc, ThresholdPolicy{{1.5, -0.5}});
  CHECK(at_peak < off_peak);
}

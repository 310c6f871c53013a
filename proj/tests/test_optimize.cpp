#include <algorithm>
#include <cmath>
#include <string>

#include "doctest.h"
#include "endofair/errors.hpp"
#include "endofair/optimize.hpp"
#include "endofair/policy.hpp"
#include "endofair/scenario.hpp"
#include "support/oracles.hpp"

using namespace endofair;
using testsupport::norm_cdf;
using testsupport::norm_sf;

namespace {

const TheoremCheck& find_check(const TheoremReport& rep, const std::string& id) {
  for (const auto& c : rep.checks)
    if (c.id == id) return c;
  REQUIRE_MESSAGE(false, "missing check ", id);
  static TheoremCheck dummy;
  return dummy;
}

}  // namespace

TEST_CASE("unconstrained optimum sits at both density crossings") {
  const auto opt = solve_unconstrained(scenarios::a());
  CHECK(std::fabs(opt.policy.thresholds[0] - 0.5) <= 1e-9);
  CHECK(std::fabs(opt.policy.thresholds[1] - 0.5) <= 1e-9);
  CHECK(std::fabs(opt.crime - 1214.69104139) <= 1e-6);
  CHECK_FALSE(opt.notion.has_value());

  const auto opt_b = solve_unconstrained(scenarios::b());
  CHECK(std::fabs(opt_b.policy.thresholds[0] - 0.5) <= 1e-9);
  CHECK(std::fabs(opt_b.policy.thresholds[1] - 1.0) <= 1e-9);
  const double dbar1 = 2.0 * norm_cdf(0.5) - 1.0;
  const double dbar2 = 2.0 * norm_cdf(1.0) - 1.0;
  const double oracle = 1000.0 * norm_sf(dbar1 / 2.0) + 1000.0 * norm_sf((dbar2 - 2.0) / 2.0);
  CHECK(std::fabs(opt_b.crime - oracle) <= 1e-7);
}

TEST_CASE("companion thresholds reproduce closed-form matches") {
  const Scenario b = scenarios::b();
  // Same innocent marginal in both groups: false-positive parity is the
  // identity map, miss-rate parity shifts by the crime-shift difference.
  CHECK(std::fabs(companion_threshold(b, FairnessNotion::fpr, 0.3).t2 - 0.3) <= 1e-10);
  CHECK(std::fabs(companion_threshold(b, FairnessNotion::fpr, 1.1).t2 - 1.1) <= 1e-10);
  CHECK(std::fabs(companion_threshold(b, FairnessNotion::fnr, 0.3).t2 - 1.3) <= 1e-10);
  CHECK(std::fabs(companion_threshold(b, FairnessNotion::fnr, -0.4).t2 - 0.6) <= 1e-10);

  // Deterrence parity: solve F_in(t) - F_cr(t) = dbar1 on the rising branch.
  const double dbar1 = 2.0 * norm_cdf(0.5) - 1.0;
  const double t2 = companion_threshold(b, FairnessNotion::delta, 0.5).t2;
  const double t2_oracle = testsupport::bisect(
      [&](double t) { return norm_cdf(t) - norm_cdf(t - 2.0) - dbar1; }, -8.0, 1.0);
  CHECK(std::fabs(t2 - t2_oracle) <= 1e-9);
  CHECK(std::fabs(t2 - (-0.26732318758)) <= 1e-8);

  // Matching group 1's crime rate would need deterrence beyond group 2's peak.
  CHECK_THROWS_AS(companion_threshold(b, FairnessNotion::cr, 0.5), InfeasibleError);
}

TEST_CASE("fair solutions on the informativeness-gap scenario") {
  const Scenario b = scenarios::b();

  const auto fpr = solve_fair(b, FairnessNotion::fpr);
  CHECK(std::fabs(fpr.policy.thresholds[0] - 0.766006733551) <= 1e-6);
  CHECK(std::fabs(fpr.policy.thresholds[1] - 0.766006733551) <= 1e-6);
  CHECK(std::fabs(fpr.crime - 1173.52831079) <= 1e-5);
  CHECK(fpr.residual <= 1e-9);

  const auto fnr = solve_fair(b, FairnessNotion::fnr);
  CHECK(std::fabs(fnr.policy.thresholds[0] - 0.23399338528) <= 1e-6);
  CHECK(std::fabs(fnr.policy.thresholds[1] - 1.23399338528) <= 1e-6);
  CHECK(std::fabs(fnr.crime - fpr.crime) <= 1e-7);  // symmetric base density
  CHECK(fnr.residual <= 1e-9);

  const auto delta = solve_fair(b, FairnessNotion::delta);
  CHECK(std::fabs(delta.crime - 1214.69104139) <= 1e-5);
  CHECK(delta.residual <= 1e-9);

  const auto ppv = solve_fair(b, FairnessNotion::ppv);
  CHECK(std::fabs(ppv.crime - 1237.97863461) <= 1e-4);
  CHECK(ppv.residual <= 1e-9);

  CHECK_THROWS_AS(solve_fair(b, FairnessNotion::cr), InfeasibleError);

  const double opt = solve_unconstrained(b).crime;
  CHECK(opt < fpr.crime - 1e-6);
  CHECK(fpr.crime < delta.crime - 1e-6);
  CHECK(delta.crime < ppv.crime - 1e-6);
}

TEST_CASE("crime-rate parity is free when the floors already agree") {
  const Scenario e = scenarios::e();
  const auto opt = solve_unconstrained(e);
  const auto cr = solve_fair(e, FairnessNotion::cr);
  CHECK(std::fabs(cr.crime - opt.crime) <= 1e-9);
  CHECK(std::fabs(cr.policy.thresholds[0] - opt.policy.thresholds[0]) <= 1e-9);
  CHECK(std::fabs(cr.policy.thresholds[1] - opt.policy.thresholds[1]) <= 1e-9);
  CHECK(cr.residual <= 1e-9);
  CHECK(std::fabs(cr.crime - 848.163288023) <= 1e-5);
}

TEST_CASE("error-rate advantage condition needs a deterrence gap") {
  CHECK_THROWS_AS(error_rate_advantage_condition(scenarios::a()), HypothesisError);
  CHECK(error_rate_advantage_condition(scenarios::b()));
  CHECK(error_rate_advantage_condition(scenarios::e()));
}

TEST_CASE("risk margin matches an independent bisection") {
  // Survivor curves N(0,2) and N(2,2); safer group's peak deterrence is
  // 2*Phi(0.5)-1. The margin solves a one-dimensional balance equation.
  const double dbar1 = 2.0 * norm_cdf(0.5) - 1.0;
  auto g = [&](double eps) {
    const double hr = norm_sf((dbar1 + eps - 2.0) / 2.0);
    return 1000.0 * (hr - norm_sf(dbar1 / 2.0)) + 1000.0 * (hr - norm_sf((dbar1 - 2.0) / 2.0));
  };
  const double eps_oracle = testsupport::bisect(g, 0.0, 4.0);
  const double margin_a = risk_gap_margin(scenarios::a());
  const double margin_b = risk_gap_margin(scenarios::b());
  CHECK(std::fabs(margin_a - eps_oracle) <= 1e-8);
  CHECK(std::fabs(margin_b - eps_oracle) <= 1e-8);  // same benefit curves, same safer peak
  CHECK(std::fabs(margin_a - 1.07226073324) <= 1e-6);
}

TEST_CASE("risk margin requires stochastically ordered benefit curves") {
  const Group g1{"g1", 1000.0, SurvivorFunction::normal(0.0, 0.5),
                 SignalStructure(BaseDensity::normal(), 0.0, 1.0, 1.0)};
  const Group g2{"g2", 1000.0, SurvivorFunction::normal(0.0, 3.0),
                 SignalStructure(BaseDensity::normal(), 0.0, 1.0, 2.0)};
  const Scenario crossing(g1, g2);
  CHECK_THROWS_AS(risk_gap_margin(crossing), HypothesisError);

  const auto cmp = compare_notions(crossing);
  CHECK_FALSE(cmp.risk_margin.has_value());
  CHECK(cmp.riskier_group == -1);
}

TEST_CASE("notion comparison summarizes the full menu") {
  const auto cmp = compare_notions(scenarios::b());
  CHECK(cmp.higher_deterrence_group == 1);
  CHECK(cmp.riskier_group == 1);
  REQUIRE(cmp.error_rate_condition.has_value());
  CHECK(*cmp.error_rate_condition);
  REQUIRE(cmp.risk_margin.has_value());

  int feasible = 0;
  for (const auto& e : cmp.entries) feasible += e.solution.has_value();
  CHECK(feasible == 4);  // crime-rate parity is out of reach
  CHECK_FALSE(cmp.entries[4].solution.has_value());
  CHECK_FALSE(cmp.entries[4].error.empty());
}

TEST_CASE("theorem checks pass on every bundled scenario") {
  for (const auto& sc :
       {scenarios::a(), scenarios::b(), scenarios::c(), scenarios::d(), scenarios::e()}) {
    const auto rep = verify_theorems(sc);
    CHECK(rep.checks.size() == 7);
    CHECK(rep.all_passed());
  }
}

TEST_CASE("theorem hypotheses gate the right scenarios") {
  const auto rep_a = verify_theorems(scenarios::a());
  CHECK(find_check(rep_a, "identical_signals").hypotheses_hold);
  CHECK(*find_check(rep_a, "identical_signals").conclusion_verified);
  CHECK(find_check(rep_a, "equal_max_deterrence").hypotheses_hold);
  CHECK_FALSE(find_check(rep_a, "error_rate_order").hypotheses_hold);
  CHECK_FALSE(find_check(rep_a, "equal_floor_crime").hypotheses_hold);

  const auto rep_b = verify_theorems(scenarios::b());
  CHECK_FALSE(find_check(rep_b, "identical_signals").hypotheses_hold);
  CHECK(find_check(rep_b, "error_rate_order").hypotheses_hold);
  CHECK(*find_check(rep_b, "error_rate_order").conclusion_verified);
  CHECK(find_check(rep_b, "informativeness_order").hypotheses_hold);
  CHECK(*find_check(rep_b, "informativeness_order").conclusion_verified);
  CHECK(find_check(rep_b, "symmetric_reflection").hypotheses_hold);
  CHECK(find_check(rep_b, "risk_gap_margin").hypotheses_hold);

  const auto rep_c = verify_theorems(scenarios::c());
  CHECK(find_check(rep_c, "equal_max_deterrence").hypotheses_hold);
  CHECK(*find_check(rep_c, "equal_max_deterrence").conclusion_verified);
  // Skewed bases: the reflection argument does not apply.
  CHECK_FALSE(find_check(rep_c, "symmetric_reflection").hypotheses_hold);

  const auto rep_e = verify_theorems(scenarios::e());
  CHECK(find_check(rep_e, "equal_floor_crime").hypotheses_hold);
  CHECK(*find_check(rep_e, "equal_floor_crime").conclusion_verified);
  CHECK(find_check(rep_e, "risk_gap_margin").hypotheses_hold);
  CHECK(*find_check(rep_e, "risk_gap_margin").conclusion_verified);
}

TEST_CASE("fair solver stays close to a local perturbation scan") {
  // Nudging the free threshold off the solved optimum never helps.
  const Scenario b = scenarios::b();
  for (const auto notion : {FairnessNotion::fpr, FairnessNotion::delta}) {
    const auto sol = solve_fair(b, notion);
    const double t1 = sol.policy.thresholds[0];
    for (const double step : {-0.01, -0.001, 0.001, 0.01}) {
      const auto companion = companion_threshold(b, notion, t1 + step);
      const double crime =
          total_crime(b, ThresholdPolicy{{t1 + step, companion.t2}});
      CHECK(crime >= sol.crime - 1e-9);
    }
  }
}

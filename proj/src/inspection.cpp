#include "endofair/inspection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "endofair/errors.hpp"
#include "endofair/root_finding.hpp"

namespace endofair {

namespace {

struct Segment {
  double lo = 0.0, hi = 0.0;  // feasible theta_1 range with capacity binding
  double n1 = 0.0, n2 = 0.0, s = 0.0;
  double theta2(double t1) const { return std::clamp((s - n1 * t1) / n2, 0.0, 1.0); }
};

Segment binding_segment(const Scenario& sc) {
  if (!sc.has_capacity())
    throw HypothesisError("inspection game: scenario has no inspection capacity");
  Segment seg;
  seg.n1 = sc.group(0).population;
  seg.n2 = sc.group(1).population;
  seg.s = *sc.capacity();
  seg.lo = std::max(0.0, (seg.s - seg.n2) / seg.n1);
  seg.hi = std::min(1.0, seg.s / seg.n1);
  return seg;
}

double profile_crime(const Scenario& sc, const Segment& seg, const std::array<double, 2>& deltas,
                     double t1) {
  return seg.n1 * sc.group(0).outside_option.value(t1 * deltas[0]) +
         seg.n2 * sc.group(1).outside_option.value(seg.theta2(t1) * deltas[1]);
}

ConditionalRates rates_at(const Group& g, double t) {
  return {1.0 - g.signal.cdf(t, Hypothesis::crime), 1.0 - g.signal.cdf(t, Hypothesis::innocent)};
}

bool strictly_interior(const InspectionProfile& p) {
  return p.intensity[0] > 0.0 && p.intensity[0] < 1.0 && p.intensity[1] > 0.0 &&
         p.intensity[1] < 1.0;
}

}  // namespace

InspectionProfile equilibrium_intensities(const Scenario& sc,
                                          const std::array<double, 2>& deltas) {
  const Segment seg = binding_segment(sc);
  if (!(deltas[0] > 0.0) || !(deltas[1] > 0.0))
    throw HypothesisError("equilibrium_intensities: deterrence must be positive in both groups");

  // Crime-rate gap between the groups; strictly decreasing in theta_1 along
  // the binding constraint, so an interior root needs a sign change.
  auto gap = [&](double t1) {
    return sc.group(0).outside_option.value(t1 * deltas[0]) -
           sc.group(1).outside_option.value(seg.theta2(t1) * deltas[1]);
  };
  const double probe = (seg.hi - seg.lo) * 1e-9;
  if (!(gap(seg.lo + probe) > 0.0) || !(gap(seg.hi - probe) < 0.0))
    throw NonInteriorEquilibrium(
        "equilibrium_intensities: no interior intensity profile equalizes crime rates; the "
        "police would ignore one group entirely");

  const double t1 = bisect_root(gap, seg.lo + probe, seg.hi - probe, 1e-13, 200);
  InspectionProfile out;
  out.intensity = {t1, (seg.s - seg.n1 * t1) / seg.n2};
  return out;
}

GameSolution first_best(const Scenario& sc) {
  const Segment seg = binding_segment(sc);
  const auto b0 = sc.group(0).signal.disincentive_bounds();
  const auto b1 = sc.group(1).signal.disincentive_bounds();
  const std::array<double, 2> dbar{b0.upper, b1.upper};

  auto crime = [&](double t1) { return profile_crime(sc, seg, dbar, t1); };

  constexpr int kGrid = 1024;
  double best_t = seg.lo;
  double best_c = crime(seg.lo);
  for (int i = 1; i < kGrid; ++i) {
    const double t = seg.lo + (seg.hi - seg.lo) * static_cast<double>(i) / (kGrid - 1);
    const double c = crime(t);
    if (c < best_c) {
      best_c = c;
      best_t = t;
    }
  }
  const double h = (seg.hi - seg.lo) / (kGrid - 1);
  const auto [t_ref, c_ref] =
      golden_min(crime, std::max(seg.lo, best_t - h), std::min(seg.hi, best_t + h), 1e-12, 200);
  if (c_ref < best_c) {
    best_t = t_ref;
    best_c = c_ref;
  }

  GameSolution out;
  out.policy = {{b0.argmax_threshold, b1.argmax_threshold}};
  out.profile.intensity = {best_t, seg.theta2(best_t)};
  out.crime = best_c;
  out.conditional = {rates_at(sc.group(0), out.policy.thresholds[0]),
                     rates_at(sc.group(1), out.policy.thresholds[1])};
  out.interior = strictly_interior(out.profile);
  return out;
}

GameSolution second_best(const Scenario& sc) {
  const Segment seg = binding_segment(sc);
  const auto b0 = sc.group(0).signal.disincentive_bounds();
  const auto b1 = sc.group(1).signal.disincentive_bounds();
  const std::array<double, 2> dbar{b0.upper, b1.upper};

  GameSolution out;
  out.policy = {{b0.argmax_threshold, b1.argmax_threshold}};
  out.profile = equilibrium_intensities(sc, dbar);
  out.crime = profile_crime(sc, seg, dbar, out.profile.intensity[0]);
  out.conditional = {rates_at(sc.group(0), out.policy.thresholds[0]),
                     rates_at(sc.group(1), out.policy.thresholds[1])};
  out.interior = true;
  return out;
}

ExtremalityReport intensity_extremality_check(const Scenario& sc, int grid_points) {
  const Segment seg = binding_segment(sc);
  const auto& h0 = sc.group(0).outside_option;
  const auto& h1 = sc.group(1).outside_option;
  if (h0.family() != h1.family())
    throw HypothesisError(
        "intensity_extremality_check: benefit curves come from different families");
  const double shape0 = h0.family() == SurvivorFunction::Family::power ? h0.power_exponent()
                                                                       : h0.scale();
  const double shape1 = h1.family() == SurvivorFunction::Family::power ? h1.power_exponent()
                                                                       : h1.scale();
  if (std::fabs(shape0 - shape1) > 1e-12)
    throw HypothesisError(
        "intensity_extremality_check: benefit curves differ by more than a location shift");

  const auto b0 = sc.group(0).signal.disincentive_bounds();
  const auto b1 = sc.group(1).signal.disincentive_bounds();
  if (std::fabs(b0.upper - b1.upper) > 1e-10)
    throw HypothesisError("intensity_extremality_check: max deterrence differs across groups");
  const std::array<double, 2> dbar{b0.upper, b1.upper};

  // Curvature must be uniform over the deterrence values each group can see.
  const Curvature c0 = h0.curvature_on(seg.lo * dbar[0], seg.hi * dbar[0]);
  const Curvature c1 =
      h1.curvature_on(seg.theta2(seg.hi) * dbar[1], seg.theta2(seg.lo) * dbar[1]);
  if (c0 == Curvature::mixed || c1 == Curvature::mixed || c0 != c1)
    throw HypothesisError(
        "intensity_extremality_check: benefit-curve curvature is not uniform over the feasible "
        "intensity range");

  const auto eq = second_best(sc);

  ExtremalityReport rep;
  rep.curvature = c0;
  rep.equilibrium_crime = eq.crime;
  rep.grid_points = grid_points;

  auto crime = [&](double t1) { return profile_crime(sc, seg, dbar, t1); };
  double prev = crime(seg.lo);
  rep.grid_min = prev;
  rep.grid_max = prev;
  for (int i = 1; i < grid_points; ++i) {
    const double t = seg.lo + (seg.hi - seg.lo) * static_cast<double>(i) / (grid_points - 1);
    const double c = crime(t);
    rep.grid_min = std::min(rep.grid_min, c);
    rep.grid_max = std::max(rep.grid_max, c);
    rep.grid_tolerance = std::max(rep.grid_tolerance, std::fabs(c - prev));
    prev = c;
  }

  const double guard = rep.grid_tolerance + 1e-9 * std::max(1.0, std::fabs(rep.grid_min));
  rep.attains_grid_min = eq.crime <= rep.grid_min + guard;
  rep.attains_grid_max = eq.crime >= rep.grid_max - guard;

  const double h = (seg.hi - seg.lo) / 2000.0;
  const double t_eq =
      std::clamp(eq.profile.intensity[0], seg.lo + h, seg.hi - h);
  rep.second_derivative = (crime(t_eq + h) - 2.0 * crime(t_eq) + crime(t_eq - h)) / (h * h);
  return rep;
}

TheoremReport verify_inspection_theorems(const Scenario& sc) {
  TheoremReport rep;

  {
    TheoremCheck c;
    c.id = "capacity_split_agreement";
    c.statement =
        "identical signal technologies with an interior policing equilibrium: the best "
        "capacity split and the equilibrium split share the same thresholds and equalize "
        "inspection-conditional error rates";
    if (!sc.has_capacity()) {
      c.hypothesis_note = "no inspection capacity specified";
    } else if (!sc.identical_signals()) {
      c.hypothesis_note = "signal technologies differ across groups";
    } else {
      try {
        const auto fb = first_best(sc);
        const auto sb = second_best(sc);
        c.hypotheses_hold = true;
        const double thr_gap =
            std::max(std::fabs(fb.policy.thresholds[0] - sb.policy.thresholds[0]),
                     std::fabs(fb.policy.thresholds[1] - sb.policy.thresholds[1]));
        double ctpr_gap = 0.0, cfpr_gap = 0.0;
        for (const auto& sol : {fb, sb}) {
          ctpr_gap = std::max(ctpr_gap, std::fabs(sol.conditional[0].ctpr - sol.conditional[1].ctpr));
          cfpr_gap = std::max(cfpr_gap, std::fabs(sol.conditional[0].cfpr - sol.conditional[1].cfpr));
        }
        c.witnesses.emplace_back("threshold_gap", thr_gap);
        c.witnesses.emplace_back("ctpr_gap", ctpr_gap);
        c.witnesses.emplace_back("cfpr_gap", cfpr_gap);
        c.witnesses.emplace_back("crime_first_best", fb.crime);
        c.witnesses.emplace_back("crime_second_best", sb.crime);
        c.conclusion_verified = thr_gap <= 1e-10 && ctpr_gap <= 1e-9 && cfpr_gap <= 1e-9;
      } catch (const NonInteriorEquilibrium&) {
        c.hypothesis_note = "no interior policing equilibrium";
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    TheoremCheck c;
    c.id = "intensity_extremality";
    c.statement =
        "location-family benefit curves with equal max deterrence: convex curves make the "
        "equilibrium intensities crime-minimal among capacity-binding profiles, concave ones "
        "crime-maximal, linear ones indifferent";
    if (!sc.has_capacity()) {
      c.hypothesis_note = "no inspection capacity specified";
      rep.checks.push_back(std::move(c));
      return rep;
    }
    try {
      const auto r = intensity_extremality_check(sc);
      c.hypotheses_hold = true;
      c.witnesses.emplace_back("equilibrium_crime", r.equilibrium_crime);
      c.witnesses.emplace_back("grid_min", r.grid_min);
      c.witnesses.emplace_back("grid_max", r.grid_max);
      c.witnesses.emplace_back("grid_tolerance", r.grid_tolerance);
      c.witnesses.emplace_back("second_derivative", r.second_derivative);
      switch (r.curvature) {
        case Curvature::convex:
          c.conclusion_verified = r.attains_grid_min;
          c.note = "convex benefit curve: equilibrium should minimize crime";
          break;
        case Curvature::concave:
          c.conclusion_verified = r.attains_grid_max;
          c.note = "concave benefit curve: equilibrium should maximize crime";
          break;
        case Curvature::linear:
          c.conclusion_verified = r.attains_grid_min && r.attains_grid_max;
          c.note = "linear benefit curve: every binding profile ties";
          break;
        case Curvature::mixed:
          c.conclusion_verified = false;
          break;
      }
    } catch (const HypothesisError& e) {
      c.hypothesis_note = e.what();
    }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

TheoremReport full_theorem_report(const Scenario& sc) {
  TheoremReport rep = verify_theorems(sc);
  TheoremReport game = verify_inspection_theorems(sc);
  for (auto& c : game.checks) rep.checks.push_back(std::move(c));
  return rep;
}

}  // namespace endofair

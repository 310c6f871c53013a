#include "endofair/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "endofair/errors.hpp"
#include "endofair/root_finding.hpp"

namespace endofair {

namespace {

constexpr double kSpanQuantile = 0.0005;
constexpr int kOuterGrid = 256;
constexpr int kPpvScanCells = 512;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::optional<double> notion_stat(const Group& g, FairnessNotion n, double t) {
  const double fnr = g.signal.cdf(t, Hypothesis::crime);
  const double tpr = 1.0 - fnr;
  const double fpr = 1.0 - g.signal.cdf(t, Hypothesis::innocent);
  switch (n) {
    case FairnessNotion::fpr:
      return fpr;
    case FairnessNotion::fnr:
      return fnr;
    case FairnessNotion::delta:
      return tpr - fpr;
    case FairnessNotion::cr:
      return g.outside_option.value(tpr - fpr);
    case FairnessNotion::ppv: {
      const double cr = g.outside_option.value(tpr - fpr);
      const double flagged = cr * tpr + (1.0 - cr) * fpr;
      if (flagged < 1e-12) return std::nullopt;
      return cr * tpr / flagged;
    }
  }
  return std::nullopt;
}

double group_crime_rate(const Group& g, double t) {
  return g.outside_option.value(g.signal.delta(t));
}

// Invert delta on its increasing branch (t <= peak); ties at the peak level
// resolve to the peak threshold itself.
double invert_delta_increasing(const SignalStructure& sig, const DisincentiveBounds& b, double d,
                               const char* what) {
  if (d > b.upper + 1e-12)
    throw InfeasibleError(std::string(what) + ": required deterrence exceeds the group maximum");
  if (d >= b.upper - 1e-12) return b.argmax_threshold;
  if (!(d > 0.0))
    throw InfeasibleError(std::string(what) + ": required deterrence is not positive");
  double w = std::max(1.0, b.argmax_threshold - sig.span_lo(1e-4));
  double lo = b.argmax_threshold - w;
  int guard = 0;
  while (sig.delta(lo) >= d) {
    w *= 2.0;
    lo = b.argmax_threshold - w;
    if (++guard > 200)
      throw InfeasibleError(std::string(what) + ": cannot bracket the deterrence level");
  }
  auto f = [&](double t) { return sig.delta(t) - d; };
  const double xtol = 1e-13 * std::max(1.0, std::fabs(lo) + std::fabs(b.argmax_threshold));
  return bisect_root(f, lo, b.argmax_threshold, xtol, 200);
}

CompanionThreshold companion_impl(const Scenario& sc, FairnessNotion n, double t1,
                                  const DisincentiveBounds& b2) {
  const Group& g1 = sc.group(0);
  const Group& g2 = sc.group(1);
  switch (n) {
    case FairnessNotion::fpr: {
      const double p = g1.signal.cdf(t1, Hypothesis::innocent);
      if (!(p > 0.0 && p < 1.0))
        throw InfeasibleError("fpr companion: rate saturates at this threshold");
      return {g2.signal.quantile(p, Hypothesis::innocent)};
    }
    case FairnessNotion::fnr: {
      const double p = g1.signal.cdf(t1, Hypothesis::crime);
      if (!(p > 0.0 && p < 1.0))
        throw InfeasibleError("fnr companion: rate saturates at this threshold");
      return {g2.signal.quantile(p, Hypothesis::crime)};
    }
    case FairnessNotion::delta:
      return {invert_delta_increasing(g2.signal, b2, g1.signal.delta(t1), "delta companion")};
    case FairnessNotion::cr: {
      const double target = group_crime_rate(g1, t1);
      double dreq;
      try {
        dreq = g2.outside_option.inverse(target);
      } catch (const InfeasibleError&) {
        throw InfeasibleError("cr companion: crime rate outside the attainable range of group 2");
      }
      return {invert_delta_increasing(g2.signal, b2, dreq, "cr companion")};
    }
    case FairnessNotion::ppv: {
      const auto target = notion_stat(g1, FairnessNotion::ppv, t1);
      if (!target) throw InfeasibleError("ppv companion: undefined for group 1 at this threshold");
      const double lo = g2.signal.span_lo(kSpanQuantile);
      const double hi = g2.signal.span_hi(kSpanQuantile);
      auto value = [&](double t) { return notion_stat(g2, FairnessNotion::ppv, t); };

      std::vector<double> roots;
      double prev_t = lo;
      auto prev = value(lo);
      const double xtol = 1e-12 * std::max(1.0, std::fabs(lo) + std::fabs(hi));
      for (int j = 1; j <= kPpvScanCells; ++j) {
        const double t = lo + (hi - lo) * static_cast<double>(j) / kPpvScanCells;
        const auto cur = value(t);
        if (prev && cur) {
          const double fa = *prev - *target;
          const double fb = *cur - *target;
          if (fa == 0.0) {
            roots.push_back(prev_t);
          } else if ((fa < 0.0) != (fb < 0.0)) {
            auto f = [&](double x) {
              const auto v = value(x);
              return v ? *v - *target : std::numeric_limits<double>::quiet_NaN();
            };
            roots.push_back(bisect_root(f, prev_t, t, xtol, 200));
          }
          if (j == kPpvScanCells && fb == 0.0) roots.push_back(t);
        }
        prev_t = t;
        prev = cur;
      }
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end(),
                              [&](double a, double b) { return std::fabs(a - b) < (hi - lo) * 1e-9; }),
                  roots.end());
      if (roots.empty()) throw InfeasibleError("ppv companion: no matching threshold");

      double best = roots.front();
      double best_crime = kInf;
      for (double r : roots) {
        const double c = group_crime_rate(g2, r);
        if (c < best_crime) {
          best_crime = c;
          best = r;
        }
      }
      return {best, roots.size() > 1};
    }
  }
  throw InfeasibleError("companion: unknown notion");
}

FairSolution solve_fair_cr(const Scenario& sc) {
  const std::array<DisincentiveBounds, 2> b{sc.group(0).signal.disincentive_bounds(),
                                            sc.group(1).signal.disincentive_bounds()};
  const double floor0 = sc.group(0).outside_option.value(b[0].upper);
  const double floor1 = sc.group(1).outside_option.value(b[1].upper);
  const std::size_t lead = floor0 >= floor1 ? 0 : 1;  // group stuck at the higher crime floor
  const std::size_t other = 1 - lead;
  const double cstar = std::max(floor0, floor1);

  ThresholdPolicy pol{};
  pol.thresholds[lead] = b[lead].argmax_threshold;
  if (std::fabs(floor0 - floor1) <= 1e-12) {
    pol.thresholds[other] = b[other].argmax_threshold;
  } else {
    double dreq;
    try {
      dreq = sc.group(other).outside_option.inverse(cstar);
    } catch (const InfeasibleError&) {
      throw InfeasibleError("solve_fair(cr): common crime rate outside the attainable range");
    }
    pol.thresholds[other] =
        invert_delta_increasing(sc.group(other).signal, b[other], dreq, "solve_fair(cr)");
  }

  const auto m = group_metrics(sc, pol);
  FairSolution out;
  out.policy = pol;
  out.crime = sc.group(0).population * m[0].crime_rate + sc.group(1).population * m[1].crime_rate;
  out.notion = FairnessNotion::cr;
  out.residual = std::fabs(m[0].crime_rate - m[1].crime_rate);
  return out;
}

}  // namespace

FairSolution solve_unconstrained(const Scenario& sc) {
  const auto b0 = sc.group(0).signal.disincentive_bounds();
  const auto b1 = sc.group(1).signal.disincentive_bounds();
  FairSolution out;
  out.policy = {{b0.argmax_threshold, b1.argmax_threshold}};
  out.crime = total_crime(sc, out.policy);
  return out;
}

CompanionThreshold companion_threshold(const Scenario& sc, FairnessNotion notion, double t1) {
  return companion_impl(sc, notion, t1, sc.group(1).signal.disincentive_bounds());
}

FairSolution solve_fair(const Scenario& sc, FairnessNotion notion) {
  if (notion == FairnessNotion::cr) return solve_fair_cr(sc);

  const Group& g1 = sc.group(0);
  const auto b2 = sc.group(1).signal.disincentive_bounds();
  const double lo = g1.signal.span_lo(kSpanQuantile);
  const double hi = g1.signal.span_hi(kSpanQuantile);

  struct Eval {
    double t1 = 0.0, t2 = 0.0, crime = kInf;
    bool multiple = false, ok = false;
  };
  auto eval = [&](double t1) -> Eval {
    try {
      const auto comp = companion_impl(sc, notion, t1, b2);
      const ThresholdPolicy pol{{t1, comp.t2}};
      return {t1, comp.t2, total_crime(sc, pol), comp.multiple_roots, true};
    } catch (const InfeasibleError&) {
      return {};
    }
  };

  Eval best;
  const double h = (hi - lo) / (kOuterGrid - 1);
  for (int i = 0; i < kOuterGrid; ++i) {
    const auto e = eval(lo + h * static_cast<double>(i));
    if (e.ok && e.crime < best.crime) best = e;
  }
  if (!best.ok)
    throw InfeasibleError("solve_fair(" + notion_name(notion) + "): no feasible threshold pair");

  const auto [tr, crime_r] =
      golden_min([&](double t) { return eval(t).crime; }, std::max(lo, best.t1 - h),
                 std::min(hi, best.t1 + h), 1e-10, 200);
  (void)crime_r;
  const Eval refined = eval(tr);
  if (refined.ok && refined.crime < best.crime) best = refined;

  FairSolution out;
  out.policy = {{best.t1, best.t2}};
  out.crime = best.crime;
  out.notion = notion;
  out.ppv_multiple_roots = best.multiple;
  const auto s1 = notion_stat(sc.group(0), notion, best.t1);
  const auto s2 = notion_stat(sc.group(1), notion, best.t2);
  out.residual = (s1 && s2) ? std::fabs(*s1 - *s2) : kInf;
  return out;
}

NotionComparison compare_notions(const Scenario& sc) {
  NotionComparison out;
  out.unconstrained = solve_unconstrained(sc);
  for (std::size_t i = 0; i < kAllNotions.size(); ++i) {
    try {
      out.entries[i].solution = solve_fair(sc, kAllNotions[i]);
    } catch (const InfeasibleError& e) {
      out.entries[i].error = e.what();
    }
  }

  const double d0 = sc.group(0).signal.disincentive_bounds().upper;
  const double d1 = sc.group(1).signal.disincentive_bounds().upper;
  if (std::fabs(d0 - d1) > 1e-10) {
    out.higher_deterrence_group = d1 > d0 ? 1 : 0;
    out.error_rate_condition = error_rate_advantage_condition(sc);
  }

  const bool g1_riskier = fosd_check(sc.group(0).outside_option, sc.group(1).outside_option);
  const bool g0_riskier = fosd_check(sc.group(1).outside_option, sc.group(0).outside_option);
  if (g0_riskier || g1_riskier) {
    out.riskier_group = g1_riskier ? 1 : 0;
    out.risk_margin = risk_gap_margin(sc);
  }
  return out;
}

bool error_rate_advantage_condition(const Scenario& sc) {
  const auto b0 = sc.group(0).signal.disincentive_bounds();
  const auto b1 = sc.group(1).signal.disincentive_bounds();
  if (std::fabs(b0.upper - b1.upper) <= 1e-10)
    throw HypothesisError(
        "error_rate_advantage_condition: max deterrence is equal across groups");
  const std::size_t lo = b0.upper < b1.upper ? 0 : 1;
  const std::size_t hi = 1 - lo;
  const double t_star = (lo == 0 ? b0 : b1).argmax_threshold;
  const auto& sig_lo = sc.group(lo).signal;
  const auto& sig_hi = sc.group(hi).signal;
  const double t_match_fnr =
      sig_hi.quantile(sig_lo.cdf(t_star, Hypothesis::crime), Hypothesis::crime);
  const double t_match_fpr =
      sig_hi.quantile(sig_lo.cdf(t_star, Hypothesis::innocent), Hypothesis::innocent);
  return t_match_fnr >= t_match_fpr - 1e-12;
}

double risk_gap_margin(const Scenario& sc) {
  const auto& h0 = sc.group(0).outside_option;
  const auto& h1 = sc.group(1).outside_option;
  const bool g1_riskier = fosd_check(h0, h1);
  const bool g0_riskier = fosd_check(h1, h0);
  if (!g0_riskier && !g1_riskier)
    throw HypothesisError("risk_gap_margin: benefit curves are not stochastically ordered");
  const std::size_t risky = g1_riskier ? 1 : 0;
  const std::size_t safe = 1 - risky;

  const auto& hr = sc.group(risky).outside_option;
  const auto& hs = sc.group(safe).outside_option;
  const double nr = sc.group(risky).population;
  const double ns = sc.group(safe).population;
  const double ds = sc.group(safe).signal.disincentive_bounds().upper;

  // Deterrence the riskier group needs before switching both groups to the
  // common rate stops costing crime overall.
  auto gap = [&](double eps) {
    const double level = hr.value(ds + eps);
    return ns * (level - hs.value(ds)) + nr * (level - hr.value(ds));
  };
  if (gap(0.0) <= 0.0) return 0.0;
  double hi = 1.0;
  int guard = 0;
  while (gap(hi) > 0.0) {
    hi *= 2.0;
    if (++guard > 80) throw InfeasibleError("risk_gap_margin: margin does not close");
  }
  return bisect_root(gap, 0.0, hi, 1e-12, 200);
}

TheoremReport verify_theorems(const Scenario& sc) {
  TheoremReport rep;
  const auto& g = sc.groups();
  const auto b0 = g[0].signal.disincentive_bounds();
  const auto b1 = g[1].signal.disincentive_bounds();
  const auto opt = solve_unconstrained(sc);
  const auto mopt = group_metrics(sc, opt.policy);

  auto fair = [&](FairnessNotion n) -> std::optional<FairSolution> {
    try {
      return solve_fair(sc, n);
    } catch (const InfeasibleError&) {
      return std::nullopt;
    }
  };
  const auto fpr_sol = fair(FairnessNotion::fpr);
  const auto fnr_sol = fair(FairnessNotion::fnr);
  const auto delta_sol = fair(FairnessNotion::delta);
  const auto cr_sol = fair(FairnessNotion::cr);

  {
    TheoremCheck c;
    c.id = "identical_signals";
    c.statement =
        "with identical signal technologies the unconstrained optimum equalizes fpr and fnr, "
        "and fpr/fnr/deterrence parity costs no extra crime";
    c.hypotheses_hold = sc.identical_signals();
    if (!c.hypotheses_hold) {
      c.hypothesis_note = "signal technologies differ across groups";
    } else {
      const double fpr_gap = std::fabs(mopt[0].fpr - mopt[1].fpr);
      const double fnr_gap = std::fabs(mopt[0].fnr - mopt[1].fnr);
      bool ok = fpr_gap <= 1e-9 && fnr_gap <= 1e-9;
      c.witnesses.emplace_back("fpr_gap", fpr_gap);
      c.witnesses.emplace_back("fnr_gap", fnr_gap);
      const std::pair<const char*, const std::optional<FairSolution>*> parity[] = {
          {"excess_crime_fpr", &fpr_sol}, {"excess_crime_fnr", &fnr_sol},
          {"excess_crime_delta", &delta_sol}};
      for (const auto& [label, sol] : parity) {
        if (!*sol) {
          ok = false;
          continue;
        }
        const double excess = (**sol).crime - opt.crime;
        c.witnesses.emplace_back(label, excess);
        ok = ok && std::fabs(excess) <= 1e-9;
      }
      c.conclusion_verified = ok;
    }
    rep.checks.push_back(std::move(c));
  }

  {
    TheoremCheck c;
    c.id = "equal_max_deterrence";
    c.statement =
        "equal max deterrence: the unconstrained optimum equalizes deterrence, so deterrence "
        "parity is free";
    c.hypotheses_hold = std::fabs(b0.upper - b1.upper) <= 1e-10;
    if (!c.hypotheses_hold) {
      c.hypothesis_note = "max deterrence differs across groups";
    } else {
      const double delta_gap = std::fabs(mopt[0].delta - mopt[1].delta);
      c.witnesses.emplace_back("delta_gap", delta_gap);
      bool ok = delta_gap <= 1e-9 && delta_sol.has_value();
      if (delta_sol) {
        const double excess = delta_sol->crime - opt.crime;
        c.witnesses.emplace_back("excess_crime_delta", excess);
        ok = ok && std::fabs(excess) <= 1e-9;
      }
      c.conclusion_verified = ok;
    }
    rep.checks.push_back(std::move(c));
  }

  {
    TheoremCheck c;
    c.id = "error_rate_order";
    c.statement =
        "unequal max deterrence: the companion-threshold order decides whether fpr/fnr parity "
        "costs at most as much crime as deterrence parity";
    c.hypotheses_hold = std::fabs(b0.upper - b1.upper) > 1e-10;
    if (!c.hypotheses_hold) {
      c.hypothesis_note = "max deterrence is equal across groups";
    } else if (!fpr_sol || !fnr_sol || !delta_sol) {
      c.conclusion_verified = false;
      c.note = "a notion expected to be feasible was not";
    } else {
      const bool cond = error_rate_advantage_condition(sc);
      c.witnesses.emplace_back("condition", cond ? 1.0 : 0.0);
      c.witnesses.emplace_back("crime_fpr", fpr_sol->crime);
      c.witnesses.emplace_back("crime_fnr", fnr_sol->crime);
      c.witnesses.emplace_back("crime_delta", delta_sol->crime);
      if (cond)
        c.conclusion_verified = fpr_sol->crime <= delta_sol->crime + 1e-9 &&
                                fnr_sol->crime <= delta_sol->crime + 1e-9;
      else
        c.conclusion_verified = fpr_sol->crime >= delta_sol->crime - 1e-9 &&
                                fnr_sol->crime >= delta_sol->crime - 1e-9;
    }
    rep.checks.push_back(std::move(c));
  }

  {
    TheoremCheck c;
    c.id = "informativeness_order";
    c.statement =
        "shared base density: equal shift/scale ratios make error-rate parity free; a higher "
        "ratio raises max deterrence and makes fpr/fnr parity cheaper than deterrence parity";
    c.hypotheses_hold = g[0].signal.base() == g[1].signal.base();
    if (!c.hypotheses_hold) {
      c.hypothesis_note = "base densities differ across groups";
    } else {
      const double r0 = g[0].signal.crime_shift() / g[0].signal.sigma();
      const double r1 = g[1].signal.crime_shift() / g[1].signal.sigma();
      c.witnesses.emplace_back("ratio_g1", r0);
      c.witnesses.emplace_back("ratio_g2", r1);
      if (std::fabs(r0 - r1) <= 1e-12) {
        const double delta_gap = std::fabs(mopt[0].delta - mopt[1].delta);
        const double fpr_gap = std::fabs(mopt[0].fpr - mopt[1].fpr);
        const double fnr_gap = std::fabs(mopt[0].fnr - mopt[1].fnr);
        c.witnesses.emplace_back("delta_gap", delta_gap);
        c.witnesses.emplace_back("fpr_gap", fpr_gap);
        c.witnesses.emplace_back("fnr_gap", fnr_gap);
        c.conclusion_verified = delta_gap <= 1e-9 && fpr_gap <= 1e-9 && fnr_gap <= 1e-9;
        c.note = "equal informativeness branch";
      } else if (!fpr_sol || !fnr_sol || !delta_sol) {
        c.conclusion_verified = false;
        c.note = "a notion expected to be feasible was not";
      } else {
        const bool order_ok = (r1 > r0) == (b1.upper > b0.upper);
        const bool cond = error_rate_advantage_condition(sc);
        c.witnesses.emplace_back("max_deterrence_g1", b0.upper);
        c.witnesses.emplace_back("max_deterrence_g2", b1.upper);
        c.witnesses.emplace_back("condition", cond ? 1.0 : 0.0);
        c.conclusion_verified = order_ok && cond &&
                                fpr_sol->crime <= delta_sol->crime + 1e-9 &&
                                fnr_sol->crime <= delta_sol->crime + 1e-9;
        c.note = "unequal informativeness branch";
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    TheoremCheck c;
    c.id = "symmetric_reflection";
    c.statement =
        "shared symmetric base density: fpr parity and fnr parity cost the same crime, linked "
        "by reflecting thresholds through each group's signal midpoint";
    c.hypotheses_hold = g[0].signal.base() == g[1].signal.base() && g[0].signal.base().symmetric();
    if (!c.hypotheses_hold) {
      c.hypothesis_note = "base densities differ or are asymmetric";
    } else if (!fpr_sol || !fnr_sol) {
      c.conclusion_verified = false;
      c.note = "error-rate parity unexpectedly infeasible";
    } else {
      const double crime_gap = std::fabs(fpr_sol->crime - fnr_sol->crime);
      c.witnesses.emplace_back("crime_gap", crime_gap);
      std::array<double, 2> reflected{};
      for (std::size_t i = 0; i < 2; ++i)
        reflected[i] = 2.0 * g[i].signal.mu() + g[i].signal.crime_shift() -
                       fpr_sol->policy.thresholds[i];
      const double fnr_gap = std::fabs(g[0].signal.cdf(reflected[0], Hypothesis::crime) -
                                       g[1].signal.cdf(reflected[1], Hypothesis::crime));
      double delta_drift = 0.0;
      for (std::size_t i = 0; i < 2; ++i)
        delta_drift = std::max(delta_drift,
                               std::fabs(g[i].signal.delta(reflected[i]) -
                                         g[i].signal.delta(fpr_sol->policy.thresholds[i])));
      c.witnesses.emplace_back("reflected_fnr_gap", fnr_gap);
      c.witnesses.emplace_back("reflected_delta_drift", delta_drift);
      c.conclusion_verified = crime_gap <= 1e-8 && fnr_gap <= 1e-9 && delta_drift <= 1e-9;
    }
    rep.checks.push_back(std::move(c));
  }

  {
    TheoremCheck c;
    c.id = "risk_gap_margin";
    c.statement =
        "with stochastically ordered benefit curves there is a deterrence margin: crime-rate "
        "parity beats deterrence parity exactly when the riskier group's max deterrence leads "
        "by at least that margin";
    const bool g1_riskier = fosd_check(g[0].outside_option, g[1].outside_option);
    const bool g0_riskier = fosd_check(g[1].outside_option, g[0].outside_option);
    c.hypotheses_hold = g0_riskier || g1_riskier;
    if (!c.hypotheses_hold) {
      c.hypothesis_note = "benefit curves are not stochastically ordered";
    } else if (!delta_sol) {
      c.conclusion_verified = false;
      c.note = "deterrence parity unexpectedly infeasible";
    } else {
      const std::size_t risky = g1_riskier ? 1 : 0;
      const double d_risky = (risky == 1 ? b1 : b0).upper;
      const double d_safe = (risky == 1 ? b0 : b1).upper;
      const double eps = risk_gap_margin(sc);
      const bool margin_met = d_risky >= d_safe + eps - 1e-9;
      const double crime_cr = cr_sol ? cr_sol->crime : kInf;
      const bool cr_better = crime_cr <= delta_sol->crime + 1e-9;
      c.witnesses.emplace_back("margin", eps);
      c.witnesses.emplace_back("deterrence_lead", d_risky - d_safe);
      c.witnesses.emplace_back("crime_cr", crime_cr);
      c.witnesses.emplace_back("crime_delta", delta_sol->crime);
      if (std::fabs(d_risky - (d_safe + eps)) <= 1e-9) {
        c.conclusion_verified = true;
        c.note = "boundary case: margin exactly met";
      } else {
        c.conclusion_verified = cr_better == margin_met;
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    TheoremCheck c;
    c.id = "equal_floor_crime";
    c.statement =
        "equal crime floors: the unconstrained optimum already equalizes crime rates, so "
        "crime-rate parity is free";
    const double floor0 = g[0].outside_option.value(b0.upper);
    const double floor1 = g[1].outside_option.value(b1.upper);
    c.hypotheses_hold = std::fabs(floor0 - floor1) <= 1e-9;
    if (!c.hypotheses_hold) {
      c.hypothesis_note = "crime floors differ across groups";
    } else {
      const double cr_gap = std::fabs(mopt[0].crime_rate - mopt[1].crime_rate);
      c.witnesses.emplace_back("crime_rate_gap", cr_gap);
      bool ok = cr_gap <= 1e-9 && cr_sol.has_value();
      if (cr_sol) {
        const double excess = cr_sol->crime - opt.crime;
        c.witnesses.emplace_back("excess_crime_cr", excess);
        ok = ok && std::fabs(excess) <= 1e-9;
      }
      c.conclusion_verified = ok;
    }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

}  // namespace endofair

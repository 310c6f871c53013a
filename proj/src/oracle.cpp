#include "endofair/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "endofair/errors.hpp"

namespace endofair {

namespace {

constexpr double kSpanQuantile = 0.0005;

struct Axis {
  std::vector<double> t;
  std::vector<double> stat;
  std::vector<double> crime;  // population-weighted group crime
  std::vector<char> valid;
};

Axis build_axis(const Group& g, FairnessNotion notion, int resolution) {
  Axis ax;
  ax.t.resize(resolution);
  ax.stat.resize(resolution);
  ax.crime.resize(resolution);
  ax.valid.assign(resolution, 1);
  const double lo = g.signal.span_lo(kSpanQuantile);
  const double hi = g.signal.span_hi(kSpanQuantile);
  for (int i = 0; i < resolution; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / (resolution - 1);
    const auto m = metrics_for(g, t);
    ax.t[i] = t;
    ax.crime[i] = g.population * m.crime_rate;
    switch (notion) {
      case FairnessNotion::fpr: ax.stat[i] = m.fpr; break;
      case FairnessNotion::fnr: ax.stat[i] = m.fnr; break;
      case FairnessNotion::delta: ax.stat[i] = m.delta; break;
      case FairnessNotion::cr: ax.stat[i] = m.crime_rate; break;
      case FairnessNotion::ppv:
        if (m.ppv) {
          ax.stat[i] = *m.ppv;
        } else {
          ax.stat[i] = 0.0;
          ax.valid[i] = 0;
        }
        break;
    }
  }
  return ax;
}

double max_adjacent_gap(const std::vector<double>& v, const std::vector<char>& valid) {
  double out = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (valid[i] && valid[i - 1]) out = std::max(out, std::fabs(v[i] - v[i - 1]));
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform draw strictly inside (0, 1); the +0.5 offset keeps both endpoints
// unreachable after rounding.
double uniform_open(std::uint64_t bits) {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

EmpiricalMetrics simulate_group(const Group& g, double threshold, double theta, bool has_profile,
                                std::uint64_t n, std::uint64_t seed, std::uint64_t group_idx) {
  EmpiricalMetrics m;
  m.n = n;
  m.seed = seed;
  const double d_eff = (has_profile ? theta : 1.0) * g.signal.delta(threshold);

  constexpr std::uint64_t kChunk = 1u << 16;
  const std::uint64_t group_stream = splitmix64(splitmix64(seed) ^ (group_idx + 1));
  for (std::uint64_t chunk = 0; chunk * kChunk < n; ++chunk) {
    const std::uint64_t end = std::min(n - chunk * kChunk, kChunk);
    std::mt19937_64 rng(splitmix64(group_stream ^ (chunk + 1)));
    for (std::uint64_t i = 0; i < end; ++i) {
      const double b = g.outside_option.inverse(uniform_open(rng()));
      const bool crime = d_eff <= b;
      const double s =
          g.signal.quantile(uniform_open(rng()), crime ? Hypothesis::crime : Hypothesis::innocent);
      const bool inspected = !has_profile || uniform_open(rng()) < theta;
      const bool convicted = inspected && s >= threshold;
      if (crime) {
        if (inspected) ++m.inspected_criminals;
        if (convicted)
          ++m.criminals_convicted;
        else
          ++m.criminals_acquitted;
      } else {
        if (inspected) ++m.inspected_innocents;
        if (convicted)
          ++m.innocents_convicted;
        else
          ++m.innocents_acquitted;
      }
    }
  }
  return m;
}

}  // namespace

std::optional<double> EmpiricalMetrics::fpr() const {
  if (inspected_innocents == 0) return std::nullopt;
  return static_cast<double>(innocents_convicted) / static_cast<double>(inspected_innocents);
}

std::optional<double> EmpiricalMetrics::fnr() const {
  if (inspected_criminals == 0) return std::nullopt;
  return static_cast<double>(inspected_criminals - criminals_convicted) /
         static_cast<double>(inspected_criminals);
}

std::optional<double> EmpiricalMetrics::ppv() const {
  const std::uint64_t convicted = criminals_convicted + innocents_convicted;
  if (convicted == 0) return std::nullopt;
  return static_cast<double>(criminals_convicted) / static_cast<double>(convicted);
}

namespace {

std::optional<double> stat_at(const Group& g, FairnessNotion notion, double t) {
  const auto m = metrics_for(g, t);
  switch (notion) {
    case FairnessNotion::fpr: return m.fpr;
    case FairnessNotion::fnr: return m.fnr;
    case FairnessNotion::delta: return m.delta;
    case FairnessNotion::cr: return m.crime_rate;
    case FairnessNotion::ppv: return m.ppv;
  }
  return std::nullopt;
}

// Thresholds where the group's statistic equals target, one per bracketing
// grid cell, refined by bisection.
std::vector<double> stat_roots(const Axis& ax, const Group& g, FairnessNotion notion,
                               double target) {
  std::vector<double> roots;
  for (std::size_t k = 1; k < ax.t.size(); ++k) {
    if (!ax.valid[k] || !ax.valid[k - 1]) continue;
    const double fa = ax.stat[k - 1] - target;
    const double fb = ax.stat[k] - target;
    if (fa == 0.0) {
      roots.push_back(ax.t[k - 1]);
      continue;
    }
    if (fa * fb >= 0.0) continue;
    double lo = ax.t[k - 1], hi = ax.t[k];
    for (int it = 0; it < 90; ++it) {
      const double mid = 0.5 * (lo + hi);
      const auto sm = stat_at(g, notion, mid);
      const double fm = sm ? *sm - target : fb;
      if (fa * fm <= 0.0)
        hi = mid;
      else
        lo = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  if (!ax.t.empty() && ax.valid.back() && ax.stat.back() == target) roots.push_back(ax.t.back());
  return roots;
}

}  // namespace

GridFairResult grid_best_fair(const Scenario& sc, FairnessNotion notion, int resolution) {
  if (resolution < 64) throw InvalidScenario("grid_best_fair: resolution must be at least 64");

  const Axis a1 = build_axis(sc.group(0), notion, resolution);
  const Axis a2 = build_axis(sc.group(1), notion, resolution);

  const double tau =
      max_adjacent_gap(a1.stat, a1.valid) + max_adjacent_gap(a2.stat, a2.valid);

  // The statistic ranges the grid can see; exact parity needs them to meet.
  auto node_range = [](const Axis& ax) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < ax.stat.size(); ++k) {
      if (!ax.valid[k]) continue;
      lo = std::min(lo, ax.stat[k]);
      hi = std::max(hi, ax.stat[k]);
    }
    return std::pair<double, double>(lo, hi);
  };
  const auto [lo1, hi1] = node_range(a1);
  const auto [lo2, hi2] = node_range(a2);
  const double overlap_lo = std::max(lo1, lo2);
  const double overlap_hi = std::min(hi1, hi2);
  if (!(overlap_lo <= overlap_hi))
    throw InfeasibleError("grid_best_fair(" + notion_name(notion) +
                          "): group statistic ranges do not overlap");

  // Best pair under the tau-relaxed constraint; anchors the certified bound,
  // since the true optimum snapped to the grid stays tau-feasible and costs
  // at most one adjacent crime step per axis.
  int best_i = -1, best_j = -1;
  double relaxed_crime = std::numeric_limits<double>::infinity();
  for (int i = 0; i < resolution; ++i) {
    if (!a1.valid[i]) continue;
    for (int j = 0; j < resolution; ++j) {
      if (!a2.valid[j]) continue;
      if (std::fabs(a1.stat[i] - a2.stat[j]) > tau) continue;
      const double crime = a1.crime[i] + a2.crime[j];
      if (crime < relaxed_crime) {
        relaxed_crime = crime;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best_i < 0)
    throw InfeasibleError("grid_best_fair(" + notion_name(notion) +
                          "): no grid pair meets the constraint");

  // Repair the relaxed pair into an exact-parity policy: hold one threshold
  // and bisect the other group's statistic onto it, trying both sides; if
  // neither target is reachable, meet in the interior of the range overlap.
  const auto& g1 = sc.group(0);
  const auto& g2 = sc.group(1);
  ThresholdPolicy repaired_policy{};
  double repaired_crime = std::numeric_limits<double>::infinity();
  double repaired_gap = 0.0;
  auto consider = [&](double t1, double t2) {
    const auto s1 = stat_at(g1, notion, t1);
    const auto s2 = stat_at(g2, notion, t2);
    if (!s1 || !s2) return;
    const double crime = g1.population * metrics_for(g1, t1).crime_rate +
                         g2.population * metrics_for(g2, t2).crime_rate;
    if (crime < repaired_crime) {
      repaired_crime = crime;
      repaired_policy = {{t1, t2}};
      repaired_gap = std::fabs(*s1 - *s2);
    }
  };
  for (const double t2 : stat_roots(a2, g2, notion, a1.stat[best_i]))
    consider(a1.t[best_i], t2);
  for (const double t1 : stat_roots(a1, g1, notion, a2.stat[best_j]))
    consider(t1, a2.t[best_j]);
  if (!std::isfinite(repaired_crime)) {
    const double w = 0.5 * (overlap_lo + overlap_hi);
    for (const double t1 : stat_roots(a1, g1, notion, w))
      for (const double t2 : stat_roots(a2, g2, notion, w)) consider(t1, t2);
  }
  if (!std::isfinite(repaired_crime))
    throw InfeasibleError("grid_best_fair(" + notion_name(notion) +
                          "): no exact-parity policy within the grid's reach");

  const double d1 = max_adjacent_gap(a1.crime, a1.valid);
  const double d2 = max_adjacent_gap(a2.crime, a2.valid);

  GridFairResult out;
  out.solution.policy = repaired_policy;
  out.solution.crime = repaired_crime;
  out.solution.notion = notion;
  out.solution.residual = repaired_gap;
  out.certified_bound = std::max(0.0, repaired_crime - relaxed_crime) + d1 + d2;
  out.constraint_tolerance = tau;
  return out;
}

std::array<EmpiricalMetrics, 2> monte_carlo(const Scenario& sc, const ThresholdPolicy& policy,
                                            std::uint64_t n, std::uint64_t seed,
                                            const std::optional<InspectionProfile>& profile) {
  if (n < 1) throw InvalidScenario("monte_carlo: sample size must be at least 1");
  if (profile) {
    for (double th : profile->intensity)
      if (!(th >= 0.0 && th <= 1.0))
        throw InvalidScenario("monte_carlo: inspection intensities must lie in [0, 1]");
  }
  std::array<EmpiricalMetrics, 2> out;
  for (std::size_t g = 0; g < 2; ++g) {
    const double theta = profile ? profile->intensity[g] : 1.0;
    out[g] = simulate_group(sc.group(g), policy.thresholds[g], theta, profile.has_value(), n,
                            seed, g);
  }
  return out;
}

}  // namespace endofair

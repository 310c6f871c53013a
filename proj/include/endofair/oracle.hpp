#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "endofair/inspection.hpp"
#include "endofair/optimize.hpp"
#include "endofair/policy.hpp"
#include "endofair/scenario.hpp"

namespace endofair {

struct GridFairResult {
  // Exact-parity policy recovered from the best grid pair by bisection.
  FairSolution solution;
  // Window around solution.crime certified to contain the true constrained
  // optimum: the relaxed grid minimum underestimates it by at most one
  // adjacent crime step per axis, and the repaired policy sits above it by
  // at most the measured repair cost plus the same steps.
  double certified_bound = 0.0;
  // Constraint gap below which a grid pair counts as feasible.
  double constraint_tolerance = 0.0;
};

// Exhaustive scan over threshold pairs; the independent check on solve_fair.
GridFairResult grid_best_fair(const Scenario& sc, FairnessNotion notion, int resolution);

struct EmpiricalMetrics {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t criminals_convicted = 0;
  std::uint64_t criminals_acquitted = 0;
  std::uint64_t innocents_convicted = 0;
  std::uint64_t innocents_acquitted = 0;
  std::uint64_t inspected_criminals = 0;
  std::uint64_t inspected_innocents = 0;

  std::uint64_t criminals() const { return criminals_convicted + criminals_acquitted; }
  std::uint64_t innocents() const { return innocents_convicted + innocents_acquitted; }
  double crime_rate() const { return static_cast<double>(criminals()) / static_cast<double>(n); }

  // Rates conditional on inspection; empty when nobody in the cell was
  // inspected (or convicted, for ppv).
  std::optional<double> fpr() const;
  std::optional<double> fnr() const;
  std::optional<double> ppv() const;
};

// Agent-level simulation. Each agent draws a private benefit through the
// survivor function's inverse, commits the act when the effective
// disincentive is below it, then emits a signal from the matching
// conditional density. With a profile, inspection is an independent
// per-agent coin; conviction needs inspection plus a signal at or above the
// threshold. Identical inputs give identical tallies regardless of internal
// chunking (per-chunk counter-based seeding).
std::array<EmpiricalMetrics, 2> monte_carlo(const Scenario& sc, const ThresholdPolicy& policy,
                                            std::uint64_t n, std::uint64_t seed,
                                            const std::optional<InspectionProfile>& profile = {});

}  // namespace endofair

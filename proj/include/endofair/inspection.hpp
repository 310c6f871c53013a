#pragma once

#include <array>

#include "endofair/optimize.hpp"
#include "endofair/policy.hpp"
#include "endofair/scenario.hpp"
#include "endofair/survivor.hpp"

namespace endofair {

// Per-group share of the population the police inspect.
struct InspectionProfile {
  std::array<double, 2> intensity{1.0, 1.0};
};

// Error rates conditional on being inspected.
struct ConditionalRates {
  double ctpr = 0.0;
  double cfpr = 0.0;
};

struct GameSolution {
  ThresholdPolicy policy;
  InspectionProfile profile;
  double crime = 0.0;
  std::array<ConditionalRates, 2> conditional{};
  bool interior = false;
};

struct ExtremalityReport {
  Curvature curvature = Curvature::mixed;
  double equilibrium_crime = 0.0;
  double grid_min = 0.0;
  double grid_max = 0.0;
  // Largest crime change between adjacent grid profiles; certifies how far
  // the true extremum can sit from the grid one.
  double grid_tolerance = 0.0;
  // Finite-difference second derivative of crime along the capacity
  // constraint at the equilibrium profile (the local version of the claim).
  double second_derivative = 0.0;
  bool attains_grid_min = false;
  bool attains_grid_max = false;
  int grid_points = 0;
};

// Intensities that equalize crime rates across groups while spending the
// whole inspection capacity. Throws NonInteriorEquilibrium when no strictly
// interior profile does so.
InspectionProfile equilibrium_intensities(const Scenario& sc, const std::array<double, 2>& deltas);

// Capacity split chosen to minimize crime directly.
GameSolution first_best(const Scenario& sc);

// Capacity split as the police equilibrium plays it.
GameSolution second_best(const Scenario& sc);

// Compares the equilibrium profile against every capacity-binding profile on
// a grid; convex benefit curves should make it crime-minimal, concave ones
// crime-maximal, linear ones indifferent.
ExtremalityReport intensity_extremality_check(const Scenario& sc, int grid_points = 1000);

TheoremReport verify_inspection_theorems(const Scenario& sc);

// Baseline checks plus the inspection-game ones.
TheoremReport full_theorem_report(const Scenario& sc);

}  // namespace endofair

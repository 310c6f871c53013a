#include "endofair/scenario.hpp"

#include <cmath>
#include <utility>

#include "endofair/errors.hpp"

namespace endofair {

Scenario::Scenario(Group g1, Group g2, std::optional<double> inspection_capacity)
    : groups_{std::move(g1), std::move(g2)}, capacity_(inspection_capacity) {
  for (const auto& g : groups_) {
    if (g.name.empty()) throw InvalidScenario("group: name must be non-empty");
    if (!(g.population > 0.0) || !std::isfinite(g.population))
      throw InvalidScenario("group '" + g.name + "': population must be finite and > 0");
  }
  if (groups_[0].name == groups_[1].name)
    throw InvalidScenario("groups must have distinct names");
  if (capacity_) {
    const double s = *capacity_;
    if (!(s > 0.0) || !std::isfinite(s))
      throw InvalidScenario("inspection: capacity must be finite and > 0");
    if (!(s < total_population()))
      throw InvalidScenario("inspection: capacity must be smaller than total population");
  }
}

namespace scenarios {

namespace {

SignalStructure normal_signal(double mu, double sigma, double shift) {
  return SignalStructure(BaseDensity::normal(), mu, sigma, shift);
}

}  // namespace

Scenario a() {
  return Scenario(
      Group{"g1", 1000.0, SurvivorFunction::normal(0.0, 2.0), normal_signal(0.0, 1.0, 1.0)},
      Group{"g2", 1000.0, SurvivorFunction::normal(2.0, 2.0), normal_signal(0.0, 1.0, 1.0)});
}

Scenario b() {
  return Scenario(
      Group{"g1", 1000.0, SurvivorFunction::normal(0.0, 2.0), normal_signal(0.0, 1.0, 1.0)},
      Group{"g2", 1000.0, SurvivorFunction::normal(2.0, 2.0), normal_signal(0.0, 1.0, 2.0)});
}

Scenario c() {
  return Scenario(
      Group{"g1", 1000.0, SurvivorFunction::normal(0.0, 2.0),
            SignalStructure(BaseDensity::two_piece_normal(0.0, 0.5, 1.5), 0.0, 1.0, 1.0)},
      Group{"g2", 1000.0, SurvivorFunction::normal(2.0, 2.0),
            SignalStructure(BaseDensity::two_piece_normal(0.0, 1.5, 0.5), 0.0, 1.0, 1.0)});
}

Scenario d() {
  // Benefit curves close enough that inspections can equalize crime rates in
  // the interior; far-apart curves (as in scenario a) force corner play.
  return Scenario(
      Group{"g1", 1000.0, SurvivorFunction::normal(0.0, 2.0), normal_signal(0.0, 1.0, 1.0)},
      Group{"g2", 1000.0, SurvivorFunction::normal(0.3, 2.0), normal_signal(0.0, 1.0, 1.0)},
      1000.0);
}

Scenario e() {
  const auto g1_signal = normal_signal(0.0, 1.0, 1.0);
  const auto g2_signal = normal_signal(0.0, 1.0, 2.0);
  // Shift group 2's benefit curve by the deterrence gap so that driving each
  // group to its maximal deterrence lands both at the same crime rate.
  const double gap =
      g2_signal.disincentive_bounds().upper - g1_signal.disincentive_bounds().upper;
  return Scenario(Group{"g1", 1000.0, SurvivorFunction::normal(0.0, 2.0), g1_signal},
                  Group{"g2", 1000.0, SurvivorFunction::normal(gap, 2.0), g2_signal});
}

}  // namespace scenarios

}  // namespace endofair

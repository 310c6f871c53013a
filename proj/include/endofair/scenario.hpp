#pragma once

#include <array>
#include <optional>
#include <string>

#include "endofair/signal.hpp"
#include "endofair/survivor.hpp"

namespace endofair {

struct Group {
  std::string name;
  double population;               // real-valued mass, not a head count
  SurvivorFunction outside_option; // benefit distribution, as a survivor function
  SignalStructure signal;
};

/**
 * A two-group instance: populations, benefit distributions, signal
 * technologies, and optionally a shared inspection capacity. Capacity must
 * be scarce (below total mass) or the inspection game is vacuous.
 */
class Scenario {
 public:
  Scenario(Group g1, Group g2, std::optional<double> inspection_capacity = std::nullopt);

  const Group& group(std::size_t i) const { return groups_.at(i); }
  const std::array<Group, 2>& groups() const { return groups_; }
  std::optional<double> capacity() const { return capacity_; }
  bool has_capacity() const { return capacity_.has_value(); }

  double total_population() const { return groups_[0].population + groups_[1].population; }
  bool identical_signals() const { return groups_[0].signal == groups_[1].signal; }

 private:
  std::array<Group, 2> groups_;
  std::optional<double> capacity_;
};

// Fixed instances used across tests, docs, and the bundled scenario files.
namespace scenarios {

Scenario a();  // identical normal signals, well separated benefit curves
Scenario b();  // group 2 twice as informative (shift/scale ratio 2 vs 1)
Scenario c();  // mirrored two-piece-normal signals, equal max deterrence
Scenario d();  // identical signals plus a binding inspection capacity
Scenario e();  // informativeness gap calibrated so both groups bottom out at equal crime

}  // namespace scenarios

}  // namespace endofair

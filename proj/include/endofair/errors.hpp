#pragma once

#include <stdexcept>
#include <string>

namespace endofair {

// Input data violates a structural invariant (bad parameter, malformed group, ...).
class InvalidScenario : public std::runtime_error {
 public:
  explicit InvalidScenario(const std::string& what) : std::runtime_error(what) {}
};

// The inputs do not satisfy the hypotheses a routine needs to be meaningful.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// No threshold policy (or intensity profile) can satisfy the requested constraint.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// The inspection game only admits corner solutions under the given capacity.
class NonInteriorEquilibrium : public HypothesisError {
 public:
  explicit NonInteriorEquilibrium(const std::string& what) : HypothesisError(what) {}
};

}  // namespace endofair

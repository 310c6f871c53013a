#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endofair/policy.hpp"
#include "endofair/scenario.hpp"

namespace endofair {

struct FairSolution {
  ThresholdPolicy policy;
  double crime;                        // population-weighted total
  std::optional<FairnessNotion> notion;  // empty for the unconstrained optimum
  double residual = 0.0;               // |statistic gap| at the solution
  bool ppv_multiple_roots = false;     // the ppv constraint matched several thresholds
};

// Crime-minimal policy with no fairness constraint: each group sits at the
// threshold where its signal densities cross, i.e. at maximal deterrence.
FairSolution solve_unconstrained(const Scenario& scenario);

struct CompanionThreshold {
  double t2;
  bool multiple_roots = false;
};

// Group-2 threshold that matches group 1's statistic at t1 under the given
// notion. Throws InfeasibleError when no threshold can match it.
CompanionThreshold companion_threshold(const Scenario& scenario, FairnessNotion notion,
                                       double t1);

// Crime-minimal policy among those equalizing the notion across groups.
FairSolution solve_fair(const Scenario& scenario, FairnessNotion notion);

struct NotionComparison {
  struct Entry {
    std::optional<FairSolution> solution;
    std::string error;  // infeasibility reason when empty solution
  };

  FairSolution unconstrained;
  std::array<Entry, 5> entries;  // indexed in kAllNotions order

  std::optional<bool> error_rate_condition;  // set when max deterrence differs
  std::optional<double> risk_margin;         // set when benefit curves are ordered
  int higher_deterrence_group = -1;
  int riskier_group = -1;
};

NotionComparison compare_notions(const Scenario& scenario);

// With groups relabeled so "hi" allows the larger max deterrence: true when
// matching the low group's miss rate needs a weakly higher hi-group threshold
// than matching its false-positive rate. Exactly then do the error-rate
// notions cost no more crime than deterrence equalization.
bool error_rate_advantage_condition(const Scenario& scenario);

// Deterrence margin epsilon >= 0: equalizing crime rates beats equalizing
// deterrence exactly when the riskier group's max deterrence exceeds the
// safer group's by at least epsilon.
double risk_gap_margin(const Scenario& scenario);

struct TheoremCheck {
  std::string id;
  std::string statement;
  bool hypotheses_hold = false;
  std::string hypothesis_note;
  std::optional<bool> conclusion_verified;  // empty when hypotheses fail
  std::vector<std::pair<std::string, double>> witnesses;
  std::string note;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.hypotheses_hold && c.conclusion_verified && !*c.conclusion_verified) return false;
    return true;
  }
};

// Checks every structural claim about threshold policies that applies to the
// scenario; claims whose hypotheses fail are reported but not judged.
TheoremReport verify_theorems(const Scenario& scenario);

}  // namespace endofair

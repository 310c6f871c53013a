#pragma once

#include <array>
#include <optional>
#include <string>

#include "endofair/scenario.hpp"

namespace endofair {

// Deterministic acceptance rule: flag whenever the signal reaches the
// group's threshold.
struct ThresholdPolicy {
  std::array<double, 2> thresholds;
};

enum class FairnessNotion { fpr, fnr, ppv, delta, cr };

constexpr std::array<FairnessNotion, 5> kAllNotions = {
    FairnessNotion::fpr, FairnessNotion::fnr, FairnessNotion::ppv, FairnessNotion::delta,
    FairnessNotion::cr};

std::string notion_name(FairnessNotion n);
std::optional<FairnessNotion> notion_from_name(const std::string& name);

struct GroupMetrics {
  double tpr;
  double fpr;
  double fnr;                               // always 1 - tpr
  std::optional<double> ppv;                // undefined when nobody is flagged
  double delta;                             // always tpr - fpr
  double crime_rate;                        // H(delta), the induced base rate
  std::optional<double> posterior_threshold;  // Pr(crime | signal at threshold)
};

GroupMetrics metrics_for(const Group& group, double threshold);

std::array<GroupMetrics, 2> group_metrics(const Scenario& scenario, const ThresholdPolicy& policy);

double total_crime(const Scenario& scenario, const ThresholdPolicy& policy);

// Posterior crime probability at signal s for one group, with the base rate
// induced by the policy itself. Degenerate base rates return themselves.
double posterior(const Scenario& scenario, const ThresholdPolicy& policy, std::size_t group,
                 double s);

std::array<double, 2> posterior_thresholds(const Scenario& scenario,
                                           const ThresholdPolicy& policy);

}  // namespace endofair

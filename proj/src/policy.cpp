#include "endofair/policy.hpp"

#include <cmath>
#include <stdexcept>

namespace endofair {

std::string notion_name(FairnessNotion n) {
  switch (n) {
    case FairnessNotion::fpr:
      return "fpr";
    case FairnessNotion::fnr:
      return "fnr";
    case FairnessNotion::ppv:
      return "ppv";
    case FairnessNotion::delta:
      return "delta";
    case FairnessNotion::cr:
      return "cr";
  }
  return "?";
}

std::optional<FairnessNotion> notion_from_name(const std::string& name) {
  for (auto n : kAllNotions)
    if (notion_name(n) == name) return n;
  return std::nullopt;
}

GroupMetrics metrics_for(const Group& g, double t) {
  GroupMetrics m{};
  m.fnr = g.signal.cdf(t, Hypothesis::crime);
  m.tpr = 1.0 - m.fnr;
  m.fpr = 1.0 - g.signal.cdf(t, Hypothesis::innocent);
  m.delta = m.tpr - m.fpr;
  m.crime_rate = g.outside_option.value(m.delta);

  const double flagged = m.crime_rate * m.tpr + (1.0 - m.crime_rate) * m.fpr;
  if (flagged >= 1e-12) m.ppv = m.crime_rate * m.tpr / flagged;

  const double fc = g.signal.pdf(t, Hypothesis::crime);
  const double fi = g.signal.pdf(t, Hypothesis::innocent);
  if (m.crime_rate <= 0.0 || m.crime_rate >= 1.0) {
    m.posterior_threshold = m.crime_rate;
  } else {
    const double num = fc * m.crime_rate;
    const double den = num + fi * (1.0 - m.crime_rate);
    m.posterior_threshold = den > 0.0 ? num / den : m.crime_rate;
  }
  return m;
}

std::array<GroupMetrics, 2> group_metrics(const Scenario& scenario,
                                          const ThresholdPolicy& policy) {
  return {metrics_for(scenario.group(0), policy.thresholds[0]),
          metrics_for(scenario.group(1), policy.thresholds[1])};
}

double total_crime(const Scenario& scenario, const ThresholdPolicy& policy) {
  const auto m = group_metrics(scenario, policy);
  return scenario.group(0).population * m[0].crime_rate +
         scenario.group(1).population * m[1].crime_rate;
}

double posterior(const Scenario& scenario, const ThresholdPolicy& policy, std::size_t group,
                 double s) {
  if (group > 1) throw std::out_of_range("posterior: group index must be 0 or 1");
  const auto& g = scenario.group(group);
  const double cr = g.outside_option.value(g.signal.delta(policy.thresholds[group]));
  if (cr <= 0.0 || cr >= 1.0) return cr;
  const double num = g.signal.pdf(s, Hypothesis::crime) * cr;
  const double den = num + g.signal.pdf(s, Hypothesis::innocent) * (1.0 - cr);
  return den > 0.0 ? num / den : cr;
}

std::array<double, 2> posterior_thresholds(const Scenario& scenario,
                                           const ThresholdPolicy& policy) {
  return {posterior(scenario, policy, 0, policy.thresholds[0]),
          posterior(scenario, policy, 1, policy.thresholds[1])};
}

}  // namespace endofair

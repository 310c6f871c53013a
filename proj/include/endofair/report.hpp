#pragma once

#include <array>
#include <string>

#include "json.hpp"

#include "endofair/inspection.hpp"
#include "endofair/optimize.hpp"
#include "endofair/oracle.hpp"
#include "endofair/policy.hpp"
#include "endofair/scenario.hpp"

namespace endofair::report {

// Top-level report document; the key set is part of the CLI contract.
nlohmann::ordered_json envelope(const std::string& command, const std::string& scenario);

nlohmann::ordered_json solution_json(const std::string& kind, const ThresholdPolicy& policy,
                                     double crime);
nlohmann::ordered_json fair_solution_json(const FairSolution& sol);
nlohmann::ordered_json game_solution_json(const std::string& kind, const GameSolution& sol);
nlohmann::ordered_json extremality_json(const ExtremalityReport& rep);
nlohmann::ordered_json metrics_json(const Scenario& sc, const ThresholdPolicy& policy);
nlohmann::ordered_json empirical_json(const std::string& group_name, const EmpiricalMetrics& em);
nlohmann::ordered_json theorem_report_json(const TheoremReport& rep);

// Plain-text rendering of an envelope for terminal use.
std::string render_table(const nlohmann::ordered_json& env);

// Formats a double the way the CSV contract wants it: 12 significant
// digits, "nan" for undefined values.
std::string format_value(double v);

struct SweepSpec {
  std::string param;  // dotted path into the scenario document, 0-based array indices
  double from = 0.0;
  double to = 0.0;
  int steps = 1;
};

// Re-solves the unconstrained optimum at each parameter value and returns
// CSV rows in parameter order. Values are solved concurrently.
std::string sweep_csv(const std::string& scenario_text, const std::string& origin,
                      const SweepSpec& spec);

}  // namespace endofair::report

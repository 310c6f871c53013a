#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "endofair/errors.hpp"
#include "endofair/inspection.hpp"
#include "endofair/optimize.hpp"
#include "endofair/oracle.hpp"
#include "endofair/policy.hpp"
#include "endofair/report.hpp"
#include "endofair/scenario.hpp"
#include "endofair/scenario_io.hpp"

namespace {

using namespace endofair;
using nlohmann::ordered_json;

void emit(const ordered_json& env, const std::string& format) {
  if (format == "json")
    std::cout << env.dump(2) << "\n";
  else
    std::cout << report::render_table(env);
}

int cmd_solve(const std::string& path, const std::string& format) {
  const Scenario sc = io::load_scenario(path);
  const FairSolution opt = solve_unconstrained(sc);
  ordered_json env = report::envelope("solve", path);
  env["solutions"].push_back(report::fair_solution_json(opt));
  env["metrics"] = report::metrics_json(sc, opt.policy);
  emit(env, format);
  return 0;
}

int cmd_fair(const std::string& path, const std::string& notion_arg, const std::string& format) {
  const auto notion = notion_from_name(notion_arg);
  if (!notion) throw CLI::ValidationError("--notion", "unknown notion " + notion_arg);
  const Scenario sc = io::load_scenario(path);
  const FairSolution sol = solve_fair(sc, *notion);
  ordered_json env = report::envelope("fair", path);
  env["solutions"].push_back(report::fair_solution_json(sol));
  env["metrics"] = report::metrics_json(sc, sol.policy);
  emit(env, format);
  return 0;
}

int cmd_compare(const std::string& path, const std::string& format) {
  const Scenario sc = io::load_scenario(path);
  const NotionComparison cmp = compare_notions(sc);
  ordered_json env = report::envelope("compare", path);
  env["solutions"].push_back(report::fair_solution_json(cmp.unconstrained));
  for (std::size_t i = 0; i < kAllNotions.size(); ++i) {
    const auto& entry = cmp.entries[i];
    if (entry.solution) {
      env["solutions"].push_back(report::fair_solution_json(*entry.solution));
    } else {
      ordered_json failed;
      failed["kind"] = "fair_" + notion_name(kAllNotions[i]);
      failed["error"] = entry.error;
      env["solutions"].push_back(std::move(failed));
    }
  }
  ordered_json summary;
  summary["kind"] = "comparison_summary";
  summary["higher_deterrence_group"] =
      cmp.higher_deterrence_group >= 0
          ? ordered_json(sc.group(cmp.higher_deterrence_group).name)
          : ordered_json(nullptr);
  summary["error_rate_condition"] =
      cmp.error_rate_condition ? ordered_json(*cmp.error_rate_condition) : ordered_json(nullptr);
  summary["riskier_group"] = cmp.riskier_group >= 0 ? ordered_json(sc.group(cmp.riskier_group).name)
                                                    : ordered_json(nullptr);
  summary["risk_margin"] = cmp.risk_margin ? ordered_json(*cmp.risk_margin) : ordered_json(nullptr);
  env["solutions"].push_back(std::move(summary));
  env["metrics"] = report::metrics_json(sc, cmp.unconstrained.policy);
  emit(env, format);
  return 0;
}

int cmd_inspect(const std::string& path, const std::string& mode, const std::string& format) {
  const Scenario sc = io::load_scenario(path);
  ordered_json env = report::envelope("inspect", path);
  if (mode == "first") {
    const GameSolution sol = first_best(sc);
    env["solutions"].push_back(report::game_solution_json("first_best", sol));
    env["metrics"] = report::metrics_json(sc, sol.policy);
  } else if (mode == "second") {
    const GameSolution sol = second_best(sc);
    env["solutions"].push_back(report::game_solution_json("second_best", sol));
    env["metrics"] = report::metrics_json(sc, sol.policy);
  } else {
    env["solutions"].push_back(report::extremality_json(intensity_extremality_check(sc)));
  }
  emit(env, format);
  return 0;
}

int cmd_simulate(const std::string& path, std::uint64_t n, std::uint64_t seed,
                 const std::string& policy_path, const std::string& format) {
  const Scenario sc = io::load_scenario(path);
  ThresholdPolicy policy;
  if (!policy_path.empty()) {
    policy = io::load_policy(policy_path);
  } else {
    policy = solve_unconstrained(sc).policy;
  }

  const std::array<double, 2> deltas{sc.group(0).signal.delta(policy.thresholds[0]),
                                     sc.group(1).signal.delta(policy.thresholds[1])};
  std::optional<InspectionProfile> profile;
  if (sc.has_capacity()) profile = equilibrium_intensities(sc, deltas);

  const auto empirical = monte_carlo(sc, policy, n, seed, profile);

  double crime = 0.0;
  for (int gi = 0; gi < 2; ++gi) {
    const double theta = profile ? profile->intensity[gi] : 1.0;
    crime += sc.group(gi).population * sc.group(gi).outside_option.value(theta * deltas[gi]);
  }

  ordered_json env = report::envelope("simulate", path);
  ordered_json sol = report::solution_json("simulated_policy", policy, crime);
  if (profile) sol["intensities"] = {profile->intensity[0], profile->intensity[1]};
  env["solutions"].push_back(std::move(sol));
  for (int gi = 0; gi < 2; ++gi)
    env["metrics"].push_back(report::empirical_json(sc.group(gi).name, empirical[gi]));
  emit(env, format);
  return 0;
}

int cmd_sweep(const std::string& path, const report::SweepSpec& spec, const std::string& out) {
  const std::string text = io::read_file(path);
  const std::string csv = report::sweep_csv(text, path, spec);
  io::write_file(out, csv);
  std::cout << "wrote " << out << " (" << spec.steps << " rows)\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& format) {
  const Scenario sc = io::load_scenario(path);
  const TheoremReport rep = full_theorem_report(sc);
  const FairSolution opt = solve_unconstrained(sc);
  ordered_json env = report::envelope("verify", path);
  env["solutions"].push_back(report::fair_solution_json(opt));
  env["metrics"] = report::metrics_json(sc, opt.policy);
  env["theorem_report"] = report::theorem_report_json(rep);
  emit(env, format);
  return rep.all_passed() ? 0 : 6;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"endogenous-crime fairness solver"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string format = "table";
  std::string notion_arg;
  std::string mode;
  std::string policy_path;
  std::string out_path;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  report::SweepSpec spec;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("scenario", scenario_path, "scenario file")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "unconstrained crime-minimizing policy");
  add_common(solve);

  CLI::App* fair = app.add_subcommand("fair", "best policy under a fairness constraint");
  add_common(fair);
  fair->add_option("--notion", notion_arg, "fairness notion")
      ->required()
      ->check(CLI::IsMember({"fpr", "fnr", "ppv", "delta", "cr"}));

  CLI::App* compare = app.add_subcommand("compare", "cost of every fairness notion");
  add_common(compare);

  CLI::App* inspect = app.add_subcommand("inspect", "inspection game solutions");
  add_common(inspect);
  inspect->add_option("--mode", mode, "first|second|check")
      ->required()
      ->check(CLI::IsMember({"first", "second", "check"}));

  CLI::App* simulate = app.add_subcommand("simulate", "agent-level Monte Carlo run");
  add_common(simulate);
  simulate->add_option("--n", n, "agents per group")->required();
  simulate->add_option("--seed", seed, "RNG seed")->required();
  simulate->add_option("--policy-from", policy_path, "threshold policy file");

  CLI::App* sweep = app.add_subcommand("sweep", "re-solve across a parameter range, emit CSV");
  sweep->add_option("scenario", scenario_path, "scenario file")->required();
  sweep->add_option("--param", spec.param, "dotted path of a numeric scenario value")->required();
  sweep->add_option("--from", spec.from, "first value")->required();
  sweep->add_option("--to", spec.to, "last value")->required();
  sweep->add_option("--steps", spec.steps, "number of values")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* verify = app.add_subcommand("verify", "run every theorem check");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(scenario_path, format);
    if (fair->parsed()) return cmd_fair(scenario_path, notion_arg, format);
    if (compare->parsed()) return cmd_compare(scenario_path, format);
    if (inspect->parsed()) return cmd_inspect(scenario_path, mode, format);
    if (simulate->parsed()) return cmd_simulate(scenario_path, n, seed, policy_path, format);
    if (sweep->parsed()) return cmd_sweep(scenario_path, spec, out_path);
    if (verify->parsed()) return cmd_verify(scenario_path, format);
  } catch (const endofair::io::FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const endofair::io::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const endofair::InvalidScenario& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const endofair::HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const endofair::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

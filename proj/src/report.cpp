#include "endofair/report.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <thread>
#include <vector>

#include "endofair/errors.hpp"
#include "endofair/scenario_io.hpp"

namespace endofair::report {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json number_or_nan(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string render_value(const ordered_json& v) {
  if (v.is_null()) return "nan";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return format_value(v.get<double>());
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += render_value(v[i]);
    }
    return out + "]";
  }
  return v.dump();
}

void render_section(std::ostringstream& out, const char* label, const ordered_json& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    out << label << "[" << i << "]:\n";
    for (const auto& [k, v] : items[i].items()) out << "  " << k << " = " << render_value(v) << "\n";
  }
}

// Follows a dotted path ("groups.1.signal.crime_shift") to a numeric leaf.
json* numeric_leaf(json& doc, const std::string& dotted) {
  json* cur = &doc;
  std::size_t pos = 0;
  while (true) {
    const std::size_t dot = dotted.find('.', pos);
    const std::string seg =
        dotted.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (seg.empty()) return nullptr;
    if (cur->is_array()) {
      std::size_t idx = 0;
      for (char c : seg) {
        if (c < '0' || c > '9') return nullptr;
        idx = idx * 10 + static_cast<std::size_t>(c - '0');
      }
      if (idx >= cur->size()) return nullptr;
      cur = &(*cur)[idx];
    } else if (cur->is_object()) {
      if (!cur->contains(seg)) return nullptr;
      cur = &(*cur)[seg];
    } else {
      return nullptr;
    }
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return cur->is_number() ? cur : nullptr;
}

std::string sweep_row(const json& doc, const std::string& param, double value,
                      const std::string& origin) {
  json mutated = doc;
  json* leaf = numeric_leaf(mutated, param);
  if (!leaf)
    throw io::SchemaError(origin + ": sweep parameter \"" + param +
                          "\" does not name a numeric scenario value");
  *leaf = value;
  const Scenario sc = io::scenario_from_json_text(mutated.dump(2) + "\n", origin);
  const FairSolution opt = solve_unconstrained(sc);
  const auto m = group_metrics(sc, opt.policy);

  std::ostringstream row;
  row << format_value(value) << ',' << format_value(opt.crime);
  for (int gi = 0; gi < 2; ++gi)
    row << ',' << format_value(sc.group(gi).population * m[gi].crime_rate);
  const double nan = std::nan("");
  row << ',' << format_value(m[0].fpr) << ',' << format_value(m[1].fpr);
  row << ',' << format_value(m[0].fnr) << ',' << format_value(m[1].fnr);
  row << ',' << format_value(m[0].ppv.value_or(nan)) << ',' << format_value(m[1].ppv.value_or(nan));
  row << ',' << format_value(m[0].delta) << ',' << format_value(m[1].delta);
  row << ',' << format_value(m[0].posterior_threshold.value_or(nan)) << ','
      << format_value(m[1].posterior_threshold.value_or(nan));
  row << '\n';
  return row.str();
}

}  // namespace

ordered_json envelope(const std::string& command, const std::string& scenario) {
  ordered_json env;
  env["command"] = command;
  env["scenario"] = scenario;
  env["solutions"] = ordered_json::array();
  env["metrics"] = ordered_json::array();
  env["theorem_report"] = ordered_json::array();
  return env;
}

ordered_json solution_json(const std::string& kind, const ThresholdPolicy& policy, double crime) {
  ordered_json s;
  s["kind"] = kind;
  s["thresholds"] = {policy.thresholds[0], policy.thresholds[1]};
  s["crime"] = crime;
  return s;
}

ordered_json fair_solution_json(const FairSolution& sol) {
  ordered_json s =
      solution_json(sol.notion ? "fair_" + notion_name(*sol.notion) : "unconstrained", sol.policy,
                    sol.crime);
  if (sol.notion) {
    s["notion"] = notion_name(*sol.notion);
    s["residual"] = sol.residual;
    if (sol.ppv_multiple_roots) s["multiple_matches"] = true;
  }
  return s;
}

ordered_json game_solution_json(const std::string& kind, const GameSolution& sol) {
  ordered_json s = solution_json(kind, sol.policy, sol.crime);
  s["intensities"] = {sol.profile.intensity[0], sol.profile.intensity[1]};
  s["interior"] = sol.interior;
  s["ctpr"] = {sol.conditional[0].ctpr, sol.conditional[1].ctpr};
  s["cfpr"] = {sol.conditional[0].cfpr, sol.conditional[1].cfpr};
  return s;
}

ordered_json extremality_json(const ExtremalityReport& rep) {
  ordered_json s;
  s["kind"] = "intensity_extremality";
  switch (rep.curvature) {
    case Curvature::convex: s["curvature"] = "convex"; break;
    case Curvature::concave: s["curvature"] = "concave"; break;
    case Curvature::linear: s["curvature"] = "linear"; break;
    case Curvature::mixed: s["curvature"] = "mixed"; break;
  }
  s["equilibrium_crime"] = rep.equilibrium_crime;
  s["grid_min"] = rep.grid_min;
  s["grid_max"] = rep.grid_max;
  s["grid_tolerance"] = rep.grid_tolerance;
  s["second_derivative"] = rep.second_derivative;
  s["attains_grid_min"] = rep.attains_grid_min;
  s["attains_grid_max"] = rep.attains_grid_max;
  s["grid_points"] = rep.grid_points;
  return s;
}

ordered_json metrics_json(const Scenario& sc, const ThresholdPolicy& policy) {
  const auto m = group_metrics(sc, policy);
  ordered_json arr = ordered_json::array();
  for (int gi = 0; gi < 2; ++gi) {
    ordered_json g;
    g["group"] = sc.group(gi).name;
    g["threshold"] = policy.thresholds[gi];
    g["tpr"] = m[gi].tpr;
    g["fpr"] = m[gi].fpr;
    g["fnr"] = m[gi].fnr;
    g["ppv"] = number_or_nan(m[gi].ppv);
    g["delta"] = m[gi].delta;
    g["crime_rate"] = m[gi].crime_rate;
    g["crime"] = sc.group(gi).population * m[gi].crime_rate;
    g["posterior_threshold"] = number_or_nan(m[gi].posterior_threshold);
    arr.push_back(std::move(g));
  }
  return arr;
}

ordered_json empirical_json(const std::string& group_name, const EmpiricalMetrics& em) {
  ordered_json g;
  g["group"] = group_name;
  g["n"] = em.n;
  g["seed"] = em.seed;
  ordered_json counts;
  counts["criminals_convicted"] = em.criminals_convicted;
  counts["criminals_acquitted"] = em.criminals_acquitted;
  counts["innocents_convicted"] = em.innocents_convicted;
  counts["innocents_acquitted"] = em.innocents_acquitted;
  counts["inspected_criminals"] = em.inspected_criminals;
  counts["inspected_innocents"] = em.inspected_innocents;
  g["counts"] = std::move(counts);
  g["crime_rate"] = em.crime_rate();
  g["fpr"] = number_or_nan(em.fpr());
  g["fnr"] = number_or_nan(em.fnr());
  g["ppv"] = number_or_nan(em.ppv());
  return g;
}

ordered_json theorem_report_json(const TheoremReport& rep) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["hypotheses_hold"] = c.hypotheses_hold;
    if (!c.hypothesis_note.empty()) e["hypothesis_note"] = c.hypothesis_note;
    e["conclusion_verified"] =
        c.conclusion_verified ? ordered_json(*c.conclusion_verified) : ordered_json(nullptr);
    if (!c.witnesses.empty()) {
      ordered_json w;
      for (const auto& [name, value] : c.witnesses) w[name] = value;
      e["witnesses"] = std::move(w);
    }
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string render_table(const ordered_json& env) {
  std::ostringstream out;
  out << "command: " << env["command"].get<std::string>() << "\n";
  out << "scenario: " << env["scenario"].get<std::string>() << "\n";
  render_section(out, "solution", env["solutions"]);
  render_section(out, "metrics", env["metrics"]);
  const auto& checks = env["theorem_report"];
  if (!checks.empty()) {
    out << "theorem_report:\n";
    for (const auto& c : checks) {
      const bool hyp = c["hypotheses_hold"].get<bool>();
      std::string tag = "SKIP";
      if (hyp) tag = c["conclusion_verified"].get<bool>() ? "PASS" : "FAIL";
      out << "  [" << tag << "] " << c["id"].get<std::string>();
      if (!hyp && c.contains("hypothesis_note"))
        out << ": " << c["hypothesis_note"].get<std::string>();
      if (hyp && c.contains("note")) out << ": " << c["note"].get<std::string>();
      if (hyp && c.contains("witnesses")) {
        out << "  (";
        bool first = true;
        for (const auto& [k, v] : c["witnesses"].items()) {
          if (!first) out << " ";
          first = false;
          out << k << "=" << format_value(v.get<double>());
        }
        out << ")";
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string sweep_csv(const std::string& scenario_text, const std::string& origin,
                      const SweepSpec& spec) {
  if (spec.steps < 1) throw InvalidScenario("sweep: steps must be at least 1");
  json doc;
  try {
    doc = json::parse(scenario_text);
  } catch (const json::parse_error& e) {
    throw io::SchemaError(origin + ": not valid JSON: " + e.what());
  }
  {
    // Validate the path and the base document up front so failures happen
    // before any work is spawned.
    json probe = doc;
    if (!numeric_leaf(probe, spec.param))
      throw io::SchemaError(origin + ": sweep parameter \"" + spec.param +
                            "\" does not name a numeric scenario value");
    io::scenario_from_json_text(scenario_text, origin);
  }

  std::vector<double> values(spec.steps);
  for (int i = 0; i < spec.steps; ++i)
    values[i] = spec.steps == 1
                    ? spec.from
                    : spec.from + (spec.to - spec.from) * static_cast<double>(i) / (spec.steps - 1);

  std::vector<std::string> rows(values.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t blocks = std::min<std::size_t>(values.size(), hw);
  std::vector<std::future<void>> futures;
  futures.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    futures.push_back(std::async(std::launch::async, [&, b] {
      for (std::size_t i = b; i < values.size(); i += blocks)
        rows[i] = sweep_row(doc, spec.param, values[i], origin);
    }));
  }
  for (auto& f : futures) f.get();

  std::string out =
      "param_value,crime_total,crime_g1,crime_g2,fpr_g1,fpr_g2,fnr_g1,fnr_g2,ppv_g1,ppv_g2,"
      "delta_g1,delta_g2,posterior_thr_g1,posterior_thr_g2\n";
  for (const auto& r : rows) out += r;
  return out;
}

}  // namespace endofair::report

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>

#include "json.hpp"

#include "endofair/errors.hpp"
#include "endofair/inspection.hpp"
#include "endofair/optimize.hpp"
#include "endofair/oracle.hpp"
#include "endofair/policy.hpp"
#include "endofair/report.hpp"
#include "endofair/scenario.hpp"
#include "endofair/scenario_io.hpp"

namespace py = pybind11;
using namespace endofair;
using nlohmann::ordered_json;

namespace {

py::object to_py(const ordered_json& j) {
  switch (j.type()) {
    case ordered_json::value_t::null: return py::none();
    case ordered_json::value_t::boolean: return py::bool_(j.get<bool>());
    case ordered_json::value_t::number_integer: return py::int_(j.get<long long>());
    case ordered_json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case ordered_json::value_t::number_float: return py::float_(j.get<double>());
    case ordered_json::value_t::string: return py::str(j.get<std::string>());
    case ordered_json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_py(item));
      return out;
    }
    case ordered_json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default: return py::none();
  }
}

ThresholdPolicy as_policy(const Scenario& sc, const std::optional<std::array<double, 2>>& thr) {
  if (thr) return ThresholdPolicy{{(*thr)[0], (*thr)[1]}};
  return solve_unconstrained(sc).policy;
}

}  // namespace

PYBIND11_MODULE(_endofair, m) {
  m.doc() = "optimal and fairness-constrained policies in an endogenous-crime model";

  py::register_exception<InvalidScenario>(m, "InvalidScenario", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<io::FileError>(m, "FileError", PyExc_OSError);
  py::register_exception<io::SchemaError>(m, "SchemaError", PyExc_ValueError);

  py::class_<Scenario>(m, "Scenario")
      .def_property_readonly("names",
                             [](const Scenario& sc) {
                               return std::array<std::string, 2>{sc.group(0).name,
                                                                 sc.group(1).name};
                             })
      .def_property_readonly("populations",
                             [](const Scenario& sc) {
                               return std::array<double, 2>{sc.group(0).population,
                                                            sc.group(1).population};
                             })
      .def_property_readonly("capacity",
                             [](const Scenario& sc) { return sc.capacity(); })
      .def("to_json", [](const Scenario& sc) { return io::scenario_to_text(sc); })
      .def("__repr__", [](const Scenario& sc) {
        return "<Scenario " + sc.group(0).name + "/" + sc.group(1).name + ">";
      });

  m.def("load_scenario", &io::load_scenario, py::arg("path"));
  m.def("scenario_from_text", &io::scenario_from_json_text, py::arg("text"),
        py::arg("origin") = "<string>");
  m.def(
      "canonical",
      [](const std::string& name) {
        if (name == "a") return scenarios::a();
        if (name == "b") return scenarios::b();
        if (name == "c") return scenarios::c();
        if (name == "d") return scenarios::d();
        if (name == "e") return scenarios::e();
        throw InvalidScenario("unknown canonical scenario \"" + name + "\" (expected a..e)");
      },
      py::arg("name"));

  m.def(
      "solve",
      [](const Scenario& sc) { return to_py(report::fair_solution_json(solve_unconstrained(sc))); },
      py::arg("scenario"));

  m.def(
      "fair",
      [](const Scenario& sc, const std::string& notion) {
        const auto n = notion_from_name(notion);
        if (!n) throw InvalidScenario("unknown fairness notion \"" + notion + "\"");
        return to_py(report::fair_solution_json(solve_fair(sc, *n)));
      },
      py::arg("scenario"), py::arg("notion"));

  m.def(
      "metrics",
      [](const Scenario& sc, const std::optional<std::array<double, 2>>& thresholds) {
        return to_py(report::metrics_json(sc, as_policy(sc, thresholds)));
      },
      py::arg("scenario"), py::arg("thresholds") = std::nullopt);

  m.def(
      "first_best",
      [](const Scenario& sc) { return to_py(report::game_solution_json("first_best", first_best(sc))); },
      py::arg("scenario"));

  m.def(
      "second_best",
      [](const Scenario& sc) {
        return to_py(report::game_solution_json("second_best", second_best(sc)));
      },
      py::arg("scenario"));

  m.def(
      "extremality_check",
      [](const Scenario& sc) { return to_py(report::extremality_json(intensity_extremality_check(sc))); },
      py::arg("scenario"));

  m.def(
      "simulate",
      [](const Scenario& sc, std::uint64_t n, std::uint64_t seed,
         const std::optional<std::array<double, 2>>& thresholds, bool play_inspection_game) {
        const ThresholdPolicy policy = as_policy(sc, thresholds);
        std::optional<InspectionProfile> profile;
        if (play_inspection_game && sc.has_capacity()) {
          profile = equilibrium_intensities(
              sc, {sc.group(0).signal.delta(policy.thresholds[0]),
                   sc.group(1).signal.delta(policy.thresholds[1])});
        }
        const auto em = monte_carlo(sc, policy, n, seed, profile);
        py::list out;
        for (int gi = 0; gi < 2; ++gi)
          out.append(to_py(report::empirical_json(sc.group(gi).name, em[gi])));
        return out;
      },
      py::arg("scenario"), py::arg("n"), py::arg("seed"),
      py::arg("thresholds") = std::nullopt, py::arg("play_inspection_game") = true);

  m.def(
      "verify",
      [](const Scenario& sc) {
        const TheoremReport rep = full_theorem_report(sc);
        py::dict out;
        out["all_passed"] = rep.all_passed();
        out["checks"] = to_py(report::theorem_report_json(rep));
        return out;
      },
      py::arg("scenario"));

  m.def(
      "sweep_csv",
      [](const std::string& scenario_text, const std::string& param, double from, double to,
         int steps) {
        report::SweepSpec spec;
        spec.param = param;
        spec.from = from;
        spec.to = to;
        spec.steps = steps;
        return report::sweep_csv(scenario_text, "<sweep>", spec);
      },
      py::arg("scenario_text"), py::arg("param"), py::arg("start"), py::arg("stop"),
      py::arg("steps"));
}

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "endofair/errors.hpp"
#include "endofair/scenario.hpp"
#include "endofair/scenario_io.hpp"

using namespace endofair;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "endofair_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path p = temp_dir() / name;
  io::write_file(p.string(), content);
  return p;
}

std::string scenario_dir() {
  const char* dir = std::getenv("ENDOFAIR_SCENARIO_DIR");
  REQUIRE_MESSAGE(dir != nullptr, "ENDOFAIR_SCENARIO_DIR must be set (run through ctest)");
  return dir;
}

std::string cli_path() {
  const char* cli = std::getenv("ENDOFAIR_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "ENDOFAIR_CLI must be set (run through ctest)");
  return cli;
}

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = temp_dir() / ("out_" + std::to_string(++counter) + ".txt");
  const fs::path err = temp_dir() / ("err_" + std::to_string(counter) + ".txt");
  const std::string cmd =
      cli_path() + " " + args + " > " + out.string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = io::read_file(out.string());
  r.err = io::read_file(err.string());
  return r;
}

struct NamedScenario {
  const char* letter;
  Scenario built;
};

std::array<NamedScenario, 5> bundled() {
  return {NamedScenario{"a", scenarios::a()}, NamedScenario{"b", scenarios::b()},
          NamedScenario{"c", scenarios::c()}, NamedScenario{"d", scenarios::d()},
          NamedScenario{"e", scenarios::e()}};
}

}  // namespace

TEST_CASE("bundled scenario files round-trip to the built-in instances") {
  for (const auto& [letter, built] : bundled()) {
    const std::string path = scenario_dir() + "/scenario_" + letter + ".json";
    const Scenario loaded = io::load_scenario(path);
    CHECK(io::scenario_to_json(loaded) == io::scenario_to_json(built));
    CHECK(io::scenario_to_text(loaded) == io::read_file(path));
    for (int g = 0; g < 2; ++g) {
      CHECK(loaded.group(g).name == built.group(g).name);
      CHECK(loaded.group(g).population == built.group(g).population);
      CHECK(loaded.group(g).outside_option == built.group(g).outside_option);
      CHECK(loaded.group(g).signal == built.group(g).signal);
    }
    CHECK(loaded.capacity() == built.capacity());
  }
}

TEST_CASE("loader reports schema problems with file and line") {
  const auto bad_json = write_temp("bad_syntax.json", "{ \"groups\": [\n");
  CHECK_THROWS_AS(io::load_scenario(bad_json.string()), io::SchemaError);

  const auto no_groups = write_temp("no_groups.json", "{}\n");
  try {
    io::load_scenario(no_groups.string());
    FAIL("expected SchemaError");
  } catch (const io::SchemaError& e) {
    CHECK(std::string(e.what()).find("groups") != std::string::npos);
    CHECK(std::string(e.what()).find("no_groups.json") != std::string::npos);
  }

  const Scenario a = scenarios::a();
  auto doc = io::scenario_to_json(a);
  doc["bogus"] = 1;
  const auto unknown = write_temp("unknown_key.json", doc.dump(2) + "\n");
  try {
    io::load_scenario(unknown.string());
    FAIL("expected SchemaError");
  } catch (const io::SchemaError& e) {
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }

  auto one_group = io::scenario_to_json(a);
  one_group["groups"].erase(1);
  const auto single = write_temp("one_group.json", one_group.dump(2) + "\n");
  CHECK_THROWS_AS(io::load_scenario(single.string()), io::SchemaError);
}

TEST_CASE("loader anchors model invariant violations to the offending line") {
  auto doc = io::scenario_to_json(scenarios::a());
  doc["groups"][0]["signal"]["sigma"] = 0.0;
  const auto path = write_temp("zero_sigma.json", doc.dump(2) + "\n");
  try {
    io::load_scenario(path.string());
    FAIL("expected InvalidScenario");
  } catch (const InvalidScenario& e) {
    const std::string what = e.what();
    CHECK(what.find("sigma must be > 0") != std::string::npos);
    CHECK(what.find("zero_sigma.json:") != std::string::npos);
  }
}

TEST_CASE("missing files raise a file error") {
  CHECK_THROWS_AS(io::load_scenario("/nonexistent/nowhere.json"), io::FileError);
}

TEST_CASE("policy files parse and validate") {
  const auto good = write_temp("policy.json", "{\"thresholds\": [0.5, 1.25]}\n");
  const ThresholdPolicy pol = io::load_policy(good.string());
  CHECK(pol.thresholds[0] == 0.5);
  CHECK(pol.thresholds[1] == 1.25);

  const auto bad = write_temp("policy_bad.json", "{\"cutoffs\": [0.5, 1.25]}\n");
  CHECK_THROWS_AS(io::load_policy(bad.string()), io::SchemaError);
}

TEST_CASE("cli exit codes distinguish the failure classes") {
  const std::string dir = scenario_dir();
  CHECK(run_cli("solve " + dir + "/scenario_a.json").exit_code == 0);
  CHECK(run_cli("solve /nonexistent/nowhere.json").exit_code == 2);

  const auto bad = write_temp("cli_bad.json", "{ not json\n");
  CHECK(run_cli("solve " + bad.string()).exit_code == 3);

  auto doc = io::scenario_to_json(scenarios::a());
  doc["groups"][1]["population"] = -5.0;
  const auto invalid = write_temp("cli_invalid.json", doc.dump(2) + "\n");
  CHECK(run_cli("solve " + invalid.string()).exit_code == 4);

  // No inspection capacity: the game is undefined on scenario a.
  CHECK(run_cli("inspect --mode second " + dir + "/scenario_a.json").exit_code == 4);

  // Crime-rate parity is unattainable on scenario a.
  CHECK(run_cli("fair --notion cr " + dir + "/scenario_a.json").exit_code == 5);
}

TEST_CASE("cli json envelope carries the documented keys") {
  const auto r = run_cli("solve --format json " + scenario_dir() + "/scenario_a.json");
  REQUIRE(r.exit_code == 0);
  const auto env = nlohmann::ordered_json::parse(r.out);
  REQUIRE(env.is_object());
  CHECK(env.size() == 5);
  CHECK(env.contains("command"));
  CHECK(env.contains("scenario"));
  CHECK(env.contains("solutions"));
  CHECK(env.contains("metrics"));
  CHECK(env.contains("theorem_report"));
  CHECK(env["command"] == "solve");
  CHECK(env["solutions"].size() == 1);
  CHECK(env["metrics"].size() == 2);

  const auto cmp = run_cli("compare --format json " + scenario_dir() + "/scenario_b.json");
  REQUIRE(cmp.exit_code == 0);
  const auto cenv = nlohmann::ordered_json::parse(cmp.out);
  bool has_summary = false;
  for (const auto& sol : cenv["solutions"])
    if (sol.contains("kind") && sol["kind"] == "comparison_summary") has_summary = true;
  CHECK(has_summary);
}

TEST_CASE("cli verify succeeds on every bundled scenario") {
  for (const auto& [letter, built] : bundled()) {
    (void)built;
    const auto r = run_cli(std::string("verify ") + scenario_dir() + "/scenario_" + letter +
                           ".json");
    CHECK_MESSAGE(r.exit_code == 0, "scenario ", letter, ": ", r.err);
  }
}

TEST_CASE("simulate and sweep are deterministic") {
  const std::string dir = scenario_dir();
  const auto s1 = run_cli("simulate --n 20000 --seed 3 --format json " + dir +
                          "/scenario_d.json");
  const auto s2 = run_cli("simulate --n 20000 --seed 3 --format json " + dir +
                          "/scenario_d.json");
  REQUIRE(s1.exit_code == 0);
  CHECK(s1.out == s2.out);

  const fs::path c1 = temp_dir() / "sweep1.csv";
  const fs::path c2 = temp_dir() / "sweep2.csv";
  const std::string args = " --param groups.1.outside_option.mu --from 0.1 --to 0.5 --steps 5 " +
                           dir + "/scenario_d.json";
  REQUIRE(run_cli("sweep --out " + c1.string() + args).exit_code == 0);
  REQUIRE(run_cli("sweep --out " + c2.string() + args).exit_code == 0);
  const std::string body1 = io::read_file(c1.string());
  CHECK(body1 == io::read_file(c2.string()));
  CHECK(body1.rfind("param_value,crime_total,crime_g1,crime_g2,fpr_g1,fpr_g2,"
                    "fnr_g1,fnr_g2,ppv_g1,ppv_g2,delta_g1,delta_g2,"
                    "posterior_thr_g1,posterior_thr_g2\n",
                    0) == 0);
  CHECK(std::count(body1.begin(), body1.end(), '\n') == 6);  // header + 5 rows
}

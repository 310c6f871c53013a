// Regenerates the canonical scenario files under scenarios/ so they stay
// byte-identical with the built-in definitions.
#include <iostream>
#include <string>

#include "endofair/scenario.hpp"
#include "endofair/scenario_io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_scenarios <output-dir>\n";
    return 1;
  }
  const std::string dir = argv[1];
  using endofair::Scenario;
  const std::pair<const char*, Scenario> all[] = {
      {"scenario_a.json", endofair::scenarios::a()},
      {"scenario_b.json", endofair::scenarios::b()},
      {"scenario_c.json", endofair::scenarios::c()},
      {"scenario_d.json", endofair::scenarios::d()},
      {"scenario_e.json", endofair::scenarios::e()},
  };
  for (const auto& [name, sc] : all) {
    const std::string path = dir + "/" + name;
    endofair::io::write_file(path, endofair::io::scenario_to_text(sc));
    std::cout << path << "\n";
  }
  return 0;
}

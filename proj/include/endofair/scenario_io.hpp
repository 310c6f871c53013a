#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "endofair/policy.hpp"
#include "endofair/scenario.hpp"

namespace endofair::io {

// The file itself could not be read.
class FileError : public std::runtime_error {
 public:
  explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

// The document is not valid JSON or does not match the scenario schema.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Parses and validates a scenario file. Schema problems raise SchemaError,
// violated model invariants raise InvalidScenario; both carry
// "path:line:" prefixes pointing at the offending value.
Scenario load_scenario(const std::string& path);

// Same, from an in-memory document; origin labels diagnostics.
Scenario scenario_from_json_text(const std::string& text, const std::string& origin);

nlohmann::ordered_json scenario_to_json(const Scenario& sc);

// Canonical serialization: 2-space indent, trailing newline.
std::string scenario_to_text(const Scenario& sc);

// Policy file: {"thresholds": [t1, t2]}.
ThresholdPolicy load_policy(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace endofair::io

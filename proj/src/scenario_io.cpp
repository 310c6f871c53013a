#include "endofair/scenario_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "endofair/errors.hpp"

namespace endofair::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Walks the raw text of an already-validated document and records the line
// each JSON-pointer path starts on, so diagnostics can point at the
// offending value.
class LineScanner {
 public:
  explicit LineScanner(const std::string& text) : text_(text) {}

  std::map<std::string, int> scan() && {
    value("");
    return std::move(lines_);
  }

 private:
  void skip_ws() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) {
      if (text_[i_] == '\n') ++line_;
      ++i_;
    }
  }

  std::string parse_string() {
    std::string out;
    ++i_;  // opening quote
    while (i_ < text_.size() && text_[i_] != '"') {
      if (text_[i_] == '\\' && i_ + 1 < text_.size()) {
        out += text_[i_ + 1];  // keys in this schema never need real unescaping
        i_ += 2;
      } else {
        if (text_[i_] == '\n') ++line_;
        out += text_[i_++];
      }
    }
    if (i_ < text_.size()) ++i_;  // closing quote
    return out;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~')
        out += "~0";
      else if (c == '/')
        out += "~1";
      else
        out += c;
    }
    return out;
  }

  void value(const std::string& ptr) {
    skip_ws();
    if (i_ >= text_.size()) return;
    lines_[ptr] = line_;
    const char c = text_[i_];
    if (c == '{') {
      ++i_;
      while (true) {
        skip_ws();
        if (i_ >= text_.size()) return;
        if (text_[i_] == '}') {
          ++i_;
          return;
        }
        const std::string key = parse_string();
        skip_ws();
        if (i_ < text_.size() && text_[i_] == ':') ++i_;
        value(ptr + "/" + escape(key));
        skip_ws();
        if (i_ < text_.size() && text_[i_] == ',') ++i_;
      }
    } else if (c == '[') {
      ++i_;
      std::size_t idx = 0;
      while (true) {
        skip_ws();
        if (i_ >= text_.size()) return;
        if (text_[i_] == ']') {
          ++i_;
          return;
        }
        value(ptr + "/" + std::to_string(idx++));
        skip_ws();
        if (i_ < text_.size() && text_[i_] == ',') ++i_;
      }
    } else if (c == '"') {
      parse_string();
    } else {
      while (i_ < text_.size() && std::strchr(",}] \t\r\n", text_[i_]) == nullptr) ++i_;
    }
  }

  const std::string& text_;
  std::size_t i_ = 0;
  int line_ = 1;
  std::map<std::string, int> lines_;
};

struct Doc {
  json body;
  std::map<std::string, int> lines;
  std::string origin;

  Doc(json b, const std::string& text, std::string o)
      : body(std::move(b)), lines(LineScanner(text).scan()), origin(std::move(o)) {}

  int line_of(std::string ptr) const {
    while (true) {
      const auto it = lines.find(ptr);
      if (it != lines.end()) return it->second;
      const auto cut = ptr.find_last_of('/');
      if (cut == std::string::npos) return 1;
      ptr.erase(cut);
    }
  }

  std::string at(const std::string& ptr) const {
    return origin + ":" + std::to_string(line_of(ptr));
  }

  [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
    throw SchemaError(at(ptr) + ": " + msg);
  }
};

const json& require(const Doc& d, const json& obj, const std::string& ptr, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) d.fail(ptr, std::string("missing required key \"") + key + '"');
  return *it;
}

double require_number(const Doc& d, const json& obj, const std::string& ptr, const char* key) {
  const json& v = require(d, obj, ptr, key);
  if (!v.is_number()) d.fail(ptr + "/" + key, std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

std::string require_string(const Doc& d, const json& obj, const std::string& ptr,
                           const char* key) {
  const json& v = require(d, obj, ptr, key);
  if (!v.is_string()) d.fail(ptr + "/" + key, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

void require_object(const Doc& d, const json& v, const std::string& ptr) {
  if (!v.is_object()) d.fail(ptr, "expected an object");
}

void reject_unknown(const Doc& d, const json& obj, const std::string& ptr,
                    const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) d.fail(ptr + "/" + key, "unknown key \"" + key + '"');
  }
}

template <typename F>
auto anchored(const Doc& d, const std::string& ptr, F&& make) {
  try {
    return make();
  } catch (const InvalidScenario& e) {
    throw InvalidScenario(d.at(ptr) + ": " + e.what());
  }
}

SurvivorFunction parse_outside_option(const Doc& d, const json& o, const std::string& ptr) {
  require_object(d, o, ptr);
  const std::string family = require_string(d, o, ptr, "family");
  if (family == "normal" || family == "logistic") {
    reject_unknown(d, o, ptr, {"family", "mu", "sigma"});
    const double mu = require_number(d, o, ptr, "mu");
    const double sigma = require_number(d, o, ptr, "sigma");
    return anchored(d, ptr, [&] {
      return family == "normal" ? SurvivorFunction::normal(mu, sigma)
                                : SurvivorFunction::logistic(mu, sigma);
    });
  }
  if (family == "power") {
    reject_unknown(d, o, ptr, {"family", "mu", "p"});
    const double mu = require_number(d, o, ptr, "mu");
    const double p = require_number(d, o, ptr, "p");
    return anchored(d, ptr, [&] { return SurvivorFunction::power(mu, p); });
  }
  d.fail(ptr + "/family", "unknown outside_option family \"" + family +
                              "\" (expected normal, logistic or power)");
}

SignalStructure parse_signal(const Doc& d, const json& o, const std::string& ptr) {
  require_object(d, o, ptr);
  const std::string base_name = require_string(d, o, ptr, "base");
  BaseDensity base = BaseDensity::normal();
  if (base_name == "normal") {
    base = BaseDensity::normal();
  } else if (base_name == "logistic") {
    base = BaseDensity::logistic();
  } else if (base_name == "gumbel") {
    base = BaseDensity::gumbel();
  } else if (base_name == "two_piece_normal") {
    const double sl = require_number(d, o, ptr, "sigma_left");
    const double sr = require_number(d, o, ptr, "sigma_right");
    base = anchored(d, ptr, [&] { return BaseDensity::two_piece_normal(0.0, sl, sr); });
  } else {
    d.fail(ptr + "/base", "unknown signal base \"" + base_name +
                              "\" (expected normal, logistic, gumbel or two_piece_normal)");
  }
  std::set<std::string> allowed{"base", "mu", "sigma", "crime_shift"};
  if (base_name == "two_piece_normal") {
    allowed.insert("sigma_left");
    allowed.insert("sigma_right");
  }
  reject_unknown(d, o, ptr, allowed);
  const double mu = require_number(d, o, ptr, "mu");
  const double sigma = require_number(d, o, ptr, "sigma");
  const double shift = require_number(d, o, ptr, "crime_shift");
  return anchored(d, ptr, [&] { return SignalStructure(base, mu, sigma, shift); });
}

Group parse_group(const Doc& d, const json& o, const std::string& ptr) {
  require_object(d, o, ptr);
  reject_unknown(d, o, ptr, {"name", "population", "outside_option", "signal"});
  Group g{require_string(d, o, ptr, "name"), require_number(d, o, ptr, "population"),
          parse_outside_option(d, require(d, o, ptr, "outside_option"), ptr + "/outside_option"),
          parse_signal(d, require(d, o, ptr, "signal"), ptr + "/signal")};
  return g;
}

Scenario parse_scenario(const Doc& d) {
  require_object(d, d.body, "");
  reject_unknown(d, d.body, "", {"groups", "inspection"});
  const json& groups = require(d, d.body, "", "groups");
  if (!groups.is_array() || groups.size() != 2)
    d.fail("/groups", "\"groups\" must be an array of exactly two groups");

  Group g1 = parse_group(d, groups[0], "/groups/0");
  Group g2 = parse_group(d, groups[1], "/groups/1");

  std::optional<double> capacity;
  std::string cap_ptr = "";
  if (d.body.contains("inspection")) {
    const json& insp = d.body["inspection"];
    require_object(d, insp, "/inspection");
    reject_unknown(d, insp, "/inspection", {"capacity"});
    capacity = require_number(d, insp, "/inspection", "capacity");
    cap_ptr = "/inspection/capacity";
  }
  return anchored(d, cap_ptr, [&] { return Scenario(std::move(g1), std::move(g2), capacity); });
}

ordered_json signal_to_json(const SignalStructure& s) {
  ordered_json o;
  const BaseDensity& b = s.base();
  switch (b.family()) {
    case BaseDensity::Family::normal: o["base"] = "normal"; break;
    case BaseDensity::Family::logistic: o["base"] = "logistic"; break;
    case BaseDensity::Family::gumbel: o["base"] = "gumbel"; break;
    case BaseDensity::Family::two_piece_normal:
      o["base"] = "two_piece_normal";
      o["sigma_left"] = b.sigma_left();
      o["sigma_right"] = b.sigma_right();
      break;
  }
  o["mu"] = s.mu();
  o["sigma"] = s.sigma();
  o["crime_shift"] = s.crime_shift();
  return o;
}

ordered_json outside_option_to_json(const SurvivorFunction& h) {
  ordered_json o;
  switch (h.family()) {
    case SurvivorFunction::Family::normal:
      o["family"] = "normal";
      o["mu"] = h.mu();
      o["sigma"] = h.scale();
      break;
    case SurvivorFunction::Family::logistic:
      o["family"] = "logistic";
      o["mu"] = h.mu();
      o["sigma"] = h.scale();
      break;
    case SurvivorFunction::Family::power:
      o["family"] = "power";
      o["mu"] = h.mu();
      o["p"] = h.power_exponent();
      break;
  }
  return o;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw FileError("cannot read file: " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw FileError("cannot write file: " + path);
}

Scenario scenario_from_json_text(const std::string& text, const std::string& origin) {
  json body;
  try {
    body = json::parse(text);
  } catch (const json::parse_error& e) {
    const int line =
        1 + static_cast<int>(std::count(text.begin(), text.begin() + std::min(text.size(), e.byte),
                                        '\n'));
    throw SchemaError(origin + ":" + std::to_string(line) + ": not valid JSON: " + e.what());
  }
  const Doc doc(std::move(body), text, origin);
  return parse_scenario(doc);
}

Scenario load_scenario(const std::string& path) {
  return scenario_from_json_text(read_file(path), path);
}

ordered_json scenario_to_json(const Scenario& sc) {
  ordered_json out;
  out["groups"] = ordered_json::array();
  for (const Group& g : sc.groups()) {
    ordered_json jg;
    jg["name"] = g.name;
    jg["population"] = g.population;
    jg["outside_option"] = outside_option_to_json(g.outside_option);
    jg["signal"] = signal_to_json(g.signal);
    out["groups"].push_back(std::move(jg));
  }
  if (sc.has_capacity()) out["inspection"] = ordered_json{{"capacity", *sc.capacity()}};
  return out;
}

std::string scenario_to_text(const Scenario& sc) { return scenario_to_json(sc).dump(2) + "\n"; }

ThresholdPolicy load_policy(const std::string& path) {
  const std::string text = read_file(path);
  json body;
  try {
    body = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": not valid JSON: " + e.what());
  }
  if (!body.is_object() || !body.contains("thresholds"))
    throw SchemaError(path + ": policy file needs a \"thresholds\" key");
  const json& t = body["thresholds"];
  if (!t.is_array() || t.size() != 2 || !t[0].is_number() || !t[1].is_number())
    throw SchemaError(path + ": \"thresholds\" must be an array of two numbers");
  return ThresholdPolicy{{t[0].get<double>(), t[1].get<double>()}};
}

}  // namespace endofair::io

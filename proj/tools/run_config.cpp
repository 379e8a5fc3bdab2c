#include "run_config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>

namespace robin::cli {

nlohmann::json load_config_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  nlohmann::json config;
  try {
    stream >> config;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!config.is_object()) {
    throw ConfigError("config file '" + path + "' must hold a JSON object");
  }
  return config;
}

void expect_keys(const nlohmann::json& object,
                 std::initializer_list<const char*> allowed,
                 const std::string& where) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError("unknown key '" + item.key() + "' in " + where);
    }
  }
}

namespace {

double require_number(const nlohmann::json& object, const char* key,
                      const std::string& where) {
  if (!object.contains(key)) {
    throw ConfigError("missing '" + std::string(key) + "' in " + where);
  }
  if (!object[key].is_number()) {
    throw ConfigError("'" + std::string(key) + "' in " + where +
                      " must be a number");
  }
  return object[key].get<double>();
}

double number_or(const nlohmann::json& object, const char* key,
                 double fallback, const std::string& where) {
  if (!object.contains(key)) return fallback;
  if (!object[key].is_number()) {
    throw ConfigError("'" + std::string(key) + "' in " + where +
                      " must be a number");
  }
  return object[key].get<double>();
}

int int_or(const nlohmann::json& object, const char* key, int fallback,
           const std::string& where) {
  if (!object.contains(key)) return fallback;
  if (!object[key].is_number_integer()) {
    throw ConfigError("'" + std::string(key) + "' in " + where +
                      " must be an integer");
  }
  return object[key].get<int>();
}

Source parse_source(const nlohmann::json& source) {
  if (!source.is_object() || !source.contains("type")) {
    throw ConfigError("problem.source must be an object with a 'type'");
  }
  const std::string type = source["type"].get<std::string>();
  if (type == "power") {
    expect_keys(source, {"type", "amplitude", "gamma"}, "problem.source");
    PowerSource power;
    power.amplitude = require_number(source, "amplitude", "problem.source");
    power.gamma = number_or(source, "gamma", 0.0, "problem.source");
    return power;
  }
  if (type == "tabulated") {
    expect_keys(source, {"type", "radii", "values"}, "problem.source");
    TabulatedSource tab;
    if (!source.contains("radii") || !source.contains("values")) {
      throw ConfigError("tabulated source needs 'radii' and 'values' arrays");
    }
    tab.radii = source["radii"].get<std::vector<double>>();
    tab.values = source["values"].get<std::vector<double>>();
    return tab;
  }
  throw ConfigError("unknown source type '" + type +
                    "' (expected 'power' or 'tabulated')");
}

}  // namespace

RadialExampleSpec parse_example_spec(const nlohmann::json& problem) {
  if (!problem.is_object()) {
    throw ConfigError("'problem' must be a JSON object");
  }
  expect_keys(problem,
              {"dimension", "radius", "beta", "theta", "source"},
              "problem");
  RadialExampleSpec spec;
  spec.dimension = int_or(problem, "dimension", 3, "problem");
  spec.radius = number_or(problem, "radius", 1.0, "problem");
  spec.beta = number_or(problem, "beta", 1.0, "problem");
  spec.theta = require_number(problem, "theta", "problem");
  if (!problem.contains("source")) {
    throw ConfigError("problem needs a 'source'");
  }
  const Source source = parse_source(problem["source"]);
  const auto* power = std::get_if<PowerSource>(&source);
  if (power == nullptr) {
    throw ConfigError("the closed-form oracle needs a power source");
  }
  spec.amplitude = power->amplitude;
  spec.gamma = power->gamma;
  validate(spec);
  return spec;
}

ProblemSpec parse_problem_spec(const nlohmann::json& config,
                               const CommonOptions& options) {
  if (!config.contains("problem")) {
    throw ConfigError("config needs a 'problem' section");
  }
  const nlohmann::json& problem = config["problem"];
  expect_keys(problem,
              {"dimension", "radius", "beta", "theta", "source"},
              "problem");

  ProblemSpec spec;
  spec.dimension = int_or(problem, "dimension", 3, "problem");
  spec.radius = number_or(problem, "radius", 1.0, "problem");
  spec.beta = number_or(problem, "beta", 1.0, "problem");
  spec.theta = require_number(problem, "theta", "problem");
  if (!problem.contains("source")) {
    throw ConfigError("problem needs a 'source'");
  }
  spec.source = parse_source(problem["source"]);

  if (config.contains("mesh")) {
    const auto& mesh = config["mesh"];
    expect_keys(mesh, {"cells", "grading"}, "mesh");
    spec.mesh.cells = int_or(mesh, "cells", spec.mesh.cells, "mesh");
    if (mesh.contains("grading")) {
      spec.mesh.grading = require_number(mesh, "grading", "mesh");
    }
  }
  if (config.contains("truncation")) {
    if (!config["truncation"].is_number()) {
      throw ConfigError("'truncation' must be a number");
    }
    spec.truncation_level = config["truncation"].get<double>();
  }
  if (config.contains("iteration")) {
    const auto& iteration = config["iteration"];
    expect_keys(iteration, {"max_steps", "damping", "tolerance"}, "iteration");
    spec.iteration.max_steps =
        int_or(iteration, "max_steps", spec.iteration.max_steps, "iteration");
    spec.iteration.damping =
        number_or(iteration, "damping", spec.iteration.damping, "iteration");
    spec.iteration.tolerance =
        number_or(iteration, "tolerance", spec.iteration.tolerance, "iteration");
  }

  if (options.mesh_cells) spec.mesh.cells = *options.mesh_cells;
  if (options.truncation) spec.truncation_level = *options.truncation;
  if (options.tolerance) spec.iteration.tolerance = *options.tolerance;

  validate(spec);
  return spec;
}

nlohmann::json example_spec_json(const RadialExampleSpec& spec) {
  return nlohmann::json{
      {"dimension", spec.dimension},
      {"radius", spec.radius},
      {"beta", spec.beta},
      {"theta", spec.theta},
      {"source",
       {{"type", "power"}, {"amplitude", spec.amplitude}, {"gamma", spec.gamma}}},
  };
}

nlohmann::json problem_spec_json(const ProblemSpec& spec) {
  nlohmann::json source;
  if (const auto* power = std::get_if<PowerSource>(&spec.source)) {
    source = {{"type", "power"},
              {"amplitude", power->amplitude},
              {"gamma", power->gamma}};
  } else {
    const auto& tab = std::get<TabulatedSource>(spec.source);
    source = {{"type", "tabulated"}, {"radii", tab.radii}, {"values", tab.values}};
  }
  return nlohmann::json{
      {"problem",
       {{"dimension", spec.dimension},
        {"radius", spec.radius},
        {"beta", spec.beta},
        {"theta", spec.theta},
        {"source", source}}},
      {"mesh",
       {{"cells", spec.mesh.cells}, {"grading", resolved_grading(spec)}}},
      {"truncation", spec.truncation_level},
      {"iteration",
       {{"max_steps", spec.iteration.max_steps},
        {"damping", spec.iteration.damping},
        {"tolerance", spec.iteration.tolerance}}},
  };
}

namespace {

bool parse_long(const std::string& text, long long& out) {
  if (text.empty() || text.size() > 15) return false;
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) return false;
  long long value = 0;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
  }
  out = text[0] == '-' ? -value : value;
  return true;
}

}  // namespace

ParsedNumber parse_number(const std::string& text, const std::string& what) {
  ParsedNumber parsed;
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long num = 0, den = 0;
    if (!parse_long(text.substr(0, slash), num) ||
        !parse_long(text.substr(slash + 1), den) || den == 0) {
      throw ConfigError("cannot parse '" + text + "' as a fraction for " + what);
    }
    parsed.exact = Rational(num, den);
    parsed.value = boost::rational_cast<double>(*parsed.exact);
    return parsed;
  }

  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    long long value = 0;
    if (!parse_long(text, value)) {
      throw ConfigError("cannot parse '" + text + "' as a number for " + what);
    }
    parsed.exact = Rational(value);
    parsed.value = static_cast<double>(value);
    return parsed;
  }

  const std::string head = text.substr(0, dot);
  const std::string tail = text.substr(dot + 1);
  long long whole = 0, frac = 0;
  if (!parse_long(head.empty() ? "0" : head, whole) ||
      (!tail.empty() && !parse_long(tail, frac)) || frac < 0 ||
      tail.size() > 12) {
    throw ConfigError("cannot parse '" + text + "' as a decimal for " + what);
  }
  long long scale = 1;
  for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
  const bool negative = !head.empty() && head[0] == '-';
  Rational exact(whole);
  exact += negative ? -Rational(frac, scale) : Rational(frac, scale);
  parsed.exact = exact;
  parsed.value = boost::rational_cast<double>(exact);
  return parsed;
}

ParsedNumber parse_number(const nlohmann::json& value, const std::string& what) {
  if (value.is_string()) {
    return parse_number(value.get<std::string>(), what);
  }
  if (value.is_number_integer()) {
    ParsedNumber parsed;
    parsed.exact = Rational(value.get<long long>());
    parsed.value = value.get<double>();
    return parsed;
  }
  if (value.is_number()) {
    // JSON floats have already lost their decimal text; double-only mode.
    ParsedNumber parsed;
    parsed.value = value.get<double>();
    return parsed;
  }
  throw ConfigError("'" + what + "' must be a number or a numeric string");
}

std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace robin::cli

#pragma once

#include "robin/fd_solver.hpp"
#include "robin/radial_oracle.hpp"
#include "robin/regimes.hpp"
#include "table_writer.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace robin::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flags shared by the subcommands; --mesh/--trunc/--tol override the
/// corresponding config entries.
struct CommonOptions {
  std::string config_path;
  std::string out_path;  // empty: stdout
  std::string format = "csv";
  std::optional<int> mesh_cells;
  std::optional<double> truncation;
  std::optional<double> tolerance;
  long seed = 12345;
};

nlohmann::json load_config_file(const std::string& path);

/// Reject unknown keys so config typos never pass silently.
void expect_keys(const nlohmann::json& object,
                 std::initializer_list<const char*> allowed,
                 const std::string& where);

RadialExampleSpec parse_example_spec(const nlohmann::json& problem);

/// Parses problem + mesh + truncation + iteration, then applies the
/// command-line overrides.
ProblemSpec parse_problem_spec(const nlohmann::json& config,
                               const CommonOptions& options);

nlohmann::json example_spec_json(const RadialExampleSpec& spec);
nlohmann::json problem_spec_json(const ProblemSpec& spec);

/// A number given on the command line or as a JSON string, kept exact when
/// the text is an integer, a decimal, or a fraction "a/b"; JSON numbers fall
/// back to double-only mode.
struct ParsedNumber {
  double value = 0.0;
  std::optional<Rational> exact;
};

ParsedNumber parse_number(const std::string& text, const std::string& what);
ParsedNumber parse_number(const nlohmann::json& value, const std::string& what);

std::string rational_string(const Rational& r);

}  // namespace robin::cli

#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace robin::cli {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, tsv, json };

OutputFormat parse_format(const std::string& name);

/// Shortest round-trip decimal representation; reruns with the same config
/// must produce byte-identical files.
std::string format_double(double x);

/// One tabular result.  Cells are JSON values so the JSON writer can emit
/// typed output while csv/tsv render numbers through format_double.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  nlohmann::json meta;  // optional per-command scalars (verdicts, exponents)
};

/// csv/tsv: '#' comment header echoing the resolved config, then the data.
/// json: one object {config, meta, columns, rows}.
std::string render(const Table& table, OutputFormat format,
                   const std::string& command,
                   const nlohmann::json& resolved_config);

/// Write via a temporary file in the same directory plus rename, so partial
/// output never lands under the final name.  Empty path writes to stdout.
void write_output(const std::string& path, const std::string& content);

}  // namespace robin::cli

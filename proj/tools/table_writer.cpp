#include "table_writer.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace robin::cli {

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "tsv") return OutputFormat::tsv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + name +
                              "' (expected csv, json or tsv)");
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string render_cell(const nlohmann::json& cell) {
  if (cell.is_null()) return "";
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
  if (cell.is_number_float()) return format_double(cell.get<double>());
  return cell.dump();
}

std::string render_delimited(const Table& table, char sep,
                             const std::string& command,
                             const nlohmann::json& config) {
  std::string out;
  out += "# robin " + command + "\n";
  out += "# config: " + config.dump() + "\n";
  if (!table.meta.is_null()) {
    out += "# meta: " + table.meta.dump() + "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += sep;
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += sep;
      out += render_cell(row[c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render(const Table& table, OutputFormat format,
                   const std::string& command,
                   const nlohmann::json& resolved_config) {
  switch (format) {
    case OutputFormat::csv:
      return render_delimited(table, ',', command, resolved_config);
    case OutputFormat::tsv:
      return render_delimited(table, '\t', command, resolved_config);
    case OutputFormat::json: {
      nlohmann::json doc;
      doc["command"] = command;
      doc["config"] = resolved_config;
      if (!table.meta.is_null()) doc["meta"] = table.meta;
      doc["columns"] = table.columns;
      doc["rows"] = table.rows;
      return doc.dump(2) + "\n";
    }
  }
  throw std::logic_error("render: unhandled format");
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!std::cout) throw IoError("failed to write to stdout");
    return;
  }
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
    if (!stream) {
      throw IoError("cannot open '" + tmp.string() + "' for writing");
    }
    stream << content;
    if (!stream) throw IoError("failed while writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    throw IoError("cannot move '" + tmp.string() + "' to '" + target.string() +
                  "': " + ec.message());
  }
}

}  // namespace robin::cli

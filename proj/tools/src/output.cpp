#include "casimir/cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace casimir::cli {

std::string format_number(double value, int precision) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
  return buffer;
}

namespace {

std::string json_number(double value, int precision) {
  return std::isfinite(value) ? format_number(value, precision) : "null";
}

}  // namespace

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_table(const std::filesystem::path& path, const Table& table, OutputFormat format, int precision) {
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i], precision);
      os << '\n';
    }
  } else {
    os << "{\"columns\": [";
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? ", " : "") << '"' << table.columns[i] << '"';
    os << "],\n \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      os << (r ? ",\n  [" : "\n  [");
      const auto& row = table.rows[r];
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << json_number(row[i], precision);
      os << ']';
    }
    os << "\n ]}\n";
  }
  write_text(path, os.str());
}

std::filesystem::path table_path(const std::filesystem::path& directory, const std::string& stem,
                                 OutputFormat format) {
  return directory / (stem + (format == OutputFormat::Csv ? ".csv" : ".json"));
}

}  // namespace casimir::cli

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "casimir/cli/config.hpp"

namespace casimir::cli {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// printf-style "%.{precision}g"; non-finite values become "nan"/"inf".
std::string format_number(double value, int precision);

/// CSV: header row, one line per row, ',' separator, LF endings.
/// JSON: {"columns": [...], "rows": [[...], ...]} with the same number
/// formatting (non-finite values as null).
void write_table(const std::filesystem::path& path, const Table& table, OutputFormat format, int precision);

/// `stem` + ".csv" or ".json".
std::filesystem::path table_path(const std::filesystem::path& directory, const std::string& stem,
                                 OutputFormat format);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace casimir::cli

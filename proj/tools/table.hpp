#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace qbell::cli {

using Cell = std::variant<std::string, double, std::int64_t, bool>;

/// Flat result table produced by one CLI command. Every row carries one cell
/// per column, in column order, so CSV and JSON render the same row set.
struct OutputRecord {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { kCsv, kJson };

/// Maps "csv"/"json" to the format enum; anything else is a usage error.
OutputFormat parse_format(const std::string& name);

/// Reals rendered with 12 significant digits, C locale, '.' decimal point.
std::string format_real(double value);

std::string render_csv(const OutputRecord& record);
std::string render_json(const OutputRecord& record);
std::string render(const OutputRecord& record, OutputFormat format);

}  // namespace qbell::cli

#include "table.hpp"

#include <cmath>
#include <cstdio>

#include "qbell/errors.hpp"

namespace qbell::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += "\"\"";
    } else {
      out += c;
    }
  }
  out += '"';
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string csv_cell(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) {
    return csv_escape(*s);
  }
  if (const auto* d = std::get_if<double>(&cell)) {
    return format_real(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return std::to_string(*i);
  }
  return std::get<bool>(cell) ? "true" : "false";
}

std::string json_cell(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) {
    return "\"" + json_escape(*s) + "\"";
  }
  if (const auto* d = std::get_if<double>(&cell)) {
    return std::isfinite(*d) ? format_real(*d) : "null";
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return std::to_string(*i);
  }
  return std::get<bool>(cell) ? "true" : "false";
}

void require_rectangular(const OutputRecord& record) {
  for (const auto& row : record.rows) {
    if (row.size() != record.columns.size()) {
      throw DomainError("output record for " + record.command +
                        " has a row with " + std::to_string(row.size()) +
                        " cells against " +
                        std::to_string(record.columns.size()) + " columns");
    }
  }
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") {
    return OutputFormat::kCsv;
  }
  if (name == "json") {
    return OutputFormat::kJson;
  }
  throw DomainError("unknown output format \"" + name +
                    "\" (expected csv or json)");
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string render_csv(const OutputRecord& record) {
  require_rectangular(record);
  std::string out;
  for (std::size_t c = 0; c < record.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += csv_escape(record.columns[c]);
  }
  out += '\n';
  for (const auto& row : record.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += csv_cell(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const OutputRecord& record) {
  require_rectangular(record);
  std::string out = "[\n";
  for (std::size_t r = 0; r < record.rows.size(); ++r) {
    out += "{";
    for (std::size_t c = 0; c < record.columns.size(); ++c) {
      if (c > 0) out += ',';
      out += "\"" + json_escape(record.columns[c]) + "\":" +
             json_cell(record.rows[r][c]);
    }
    out += r + 1 < record.rows.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

std::string render(const OutputRecord& record, OutputFormat format) {
  return format == OutputFormat::kCsv ? render_csv(record)
                                      : render_json(record);
}

}  // namespace qbell::cli

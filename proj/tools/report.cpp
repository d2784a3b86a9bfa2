#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace isoshare::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[40];
  const double magnitude = std::abs(value);
  if (magnitude >= 1e9 || magnitude < 1e-9) {
    std::snprintf(buf, sizeof buf, "%.17e", value);
  } else {
    std::snprintf(buf, sizeof buf, "%.17g", value);
  }
  return buf;
}

std::string format_human(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

void Record::add(const std::string& key, double value) {
  fields.emplace_back(key, format_number(value));
}

void Record::add(const std::string& key, long long value) {
  fields.emplace_back(key, std::to_string(value));
}

void Record::add(const std::string& key, const std::string& value) {
  fields.emplace_back(key, value);
}

void write_record(std::ostream& out, const Record& record) {
  for (const auto& [key, value] : record.fields) {
    out << key << " = " << value << "\n";
  }
}

void write_table(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i != 0) out << ',';
    out << table.header[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out << ',';
      out << format_number(row[i]);
    }
    out << "\n";
  }
}

}  // namespace isoshare::cli

#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace isoshare::cli {

/// Machine-readable number format: '.' decimal separator, 17 significant
/// digits (round-trips doubles exactly), scientific notation beyond 1e+-9.
std::string format_number(double value);

/// Shorter rendering for human-readable summaries.
std::string format_human(double value);

/// Single-computation machine format: `key = value` lines in insertion order.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& key, double value);
  void add(const std::string& key, long long value);
  void add(const std::string& key, const std::string& value);
};

void write_record(std::ostream& out, const Record& record);

/// Scan machine format: comma-delimited, header row, one record per grid point.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_table(std::ostream& out, const Table& table);

}  // namespace isoshare::cli

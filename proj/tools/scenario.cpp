#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace isoshare::cli {
namespace {

const std::set<std::string>& scenario_only_keys() {
  static const std::set<std::string> keys = {"family", "share_tolerance",
                                             "verdict_tolerance"};
  return keys;
}

const std::set<std::string>& known_top_level_keys() {
  static const std::set<std::string> keys = [] {
    std::set<std::string> all = scenario_only_keys();
    for (const auto& [family, schema] : family_schemas()) {
      for (const std::string& key : schema.required) all.insert(key);
      for (const auto& [key, unused] : schema.optional_defaults) all.insert(key);
    }
    return all;
  }();
  return keys;
}

std::vector<double> parse_grid_record(const ConfigRecord& record,
                                      const std::string& section_name) {
  const std::string* values = record.find("values");
  const std::string* log_range = record.find("log_range");
  for (const auto& [key, unused] : record.entries) {
    if (key != "values" && key != "log_range") {
      throw DomainError("unknown key '" + key + "' in section [" + section_name +
                        "] (expected `values` or `log_range`)");
    }
  }
  if ((values != nullptr) == (log_range != nullptr)) {
    throw DomainError("section [" + section_name +
                      "] needs exactly one of `values` or `log_range`");
  }

  if (values != nullptr) {
    std::istringstream in(*values);
    std::vector<double> grid;
    std::string token;
    while (in >> token) {
      grid.push_back(parse_number(token, "[" + section_name + "] values"));
    }
    if (grid.empty()) {
      throw DomainError("section [" + section_name + "]: `values` list is empty");
    }
    return grid;
  }

  std::istringstream in(*log_range);
  std::string lo_text, hi_text, count_text, extra;
  if (!(in >> lo_text >> hi_text >> count_text) || (in >> extra)) {
    throw DomainError("section [" + section_name +
                      "]: `log_range` expects exactly `lo hi count`");
  }
  const double lo = parse_number(lo_text, "[" + section_name + "] log_range lo");
  const double hi = parse_number(hi_text, "[" + section_name + "] log_range hi");
  const double count = parse_number(count_text, "[" + section_name + "] log_range count");
  if (count < 1.0 || count != std::floor(count)) {
    throw DomainError("section [" + section_name +
                      "]: `log_range` count must be a positive integer");
  }
  return log_spaced(lo, hi, static_cast<std::size_t>(count));
}

}  // namespace

ConfigDocument load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("cannot open scenario file '" + path + "'");
  }
  ConfigDocument doc = parse_config(in);
  validate_scenario_document(doc);
  return doc;
}

void validate_scenario_document(const ConfigDocument& doc) {
  for (const auto& [key, unused] : doc.top.entries) {
    if (known_top_level_keys().count(key) == 0) {
      throw DomainError("unknown scenario key '" + key + "'");
    }
  }
  for (const auto& [name, unused] : doc.sections) {
    if (name != "w_grid" && name != "r_grid" && name != "q_grid") {
      throw DomainError("unknown scenario section [" + name + "]");
    }
  }
}

FamilyConfig resolve_family_config(const FamilyOptions& options,
                                   const ConfigDocument* doc) {
  FamilyConfig config;
  if (!options.family.empty()) {
    config.family = options.family;
  } else if (doc != nullptr && doc->top.has("family")) {
    config.family = *doc->top.find("family");
  } else {
    throw DomainError("no technology family given (use --family or a scenario file)");
  }

  // A --family flag that switches away from the file's family also drops the
  // file's parameters; they belong to the family being replaced.
  const bool file_params_apply =
      doc != nullptr &&
      (!doc->top.has("family") || *doc->top.find("family") == config.family);
  if (file_params_apply) {
    for (const auto& [key, value] : doc->top.entries) {
      if (scenario_only_keys().count(key) != 0) continue;
      config.params[key] = parse_number(value, "scenario key '" + key + "'");
    }
  }
  for (const auto& [key, value] : options.params) {
    config.params[key] = value;
  }
  return config;
}

ScanConfig resolve_scan_config(const ConfigDocument* doc) {
  ScanConfig cfg = ScanConfig::default_grid();
  if (doc == nullptr) return cfg;

  if (const ConfigRecord* record = doc->section("w_grid")) {
    cfg.wage_grid = parse_grid_record(*record, "w_grid");
  }
  if (const ConfigRecord* record = doc->section("r_grid")) {
    cfg.rental_grid = parse_grid_record(*record, "r_grid");
  }
  if (const ConfigRecord* record = doc->section("q_grid")) {
    cfg.output_grid = parse_grid_record(*record, "q_grid");
  }
  if (const std::string* tol = doc->top.find("share_tolerance")) {
    cfg.share_tolerance = parse_number(*tol, "share_tolerance");
  }
  if (const std::string* tol = doc->top.find("verdict_tolerance")) {
    cfg.verdict_tolerance = parse_number(*tol, "verdict_tolerance");
  }
  return cfg;
}

}  // namespace isoshare::cli

#pragma once

#include <istream>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "isoshare/production.hpp"

namespace isoshare {

/// One flat configuration record: ordered key/value pairs.
struct ConfigRecord {
  std::vector<std::pair<std::string, std::string>> entries;

  bool has(const std::string& key) const;
  const std::string* find(const std::string& key) const;
};

/// Plain-text scenario document: a top-level record followed by named
/// [section] records. Lines are `key = value`; '#' starts a comment.
struct ConfigDocument {
  ConfigRecord top;
  std::vector<std::pair<std::string, ConfigRecord>> sections;

  const ConfigRecord* section(const std::string& name) const;
};

/// Throws DomainError with the line number on malformed lines or duplicate
/// keys within a record.
ConfigDocument parse_config(std::istream& in);

/// Parses a decimal or scientific literal, rejecting trailing garbage.
double parse_number(const std::string& text, const std::string& what);

/// A constructible family record: family name plus named numeric parameters.
struct FamilyConfig {
  std::string family;
  std::map<std::string, double> params;
};

/// Parameter schema for one family.
struct FamilySchema {
  std::vector<std::string> required;
  std::vector<std::pair<std::string, double>> optional_defaults;
};

/// Keyed by family name: cobb-douglas, ces, leontief, perturbed.
const std::map<std::string, FamilySchema>& family_schemas();

/// Builds the family, rejecting unknown parameter keys by name, requiring the
/// schema's parameters, and validating the family invariants.
std::unique_ptr<ProductionFunction> make_production_function(const FamilyConfig& config);

}  // namespace isoshare

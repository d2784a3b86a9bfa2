#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isoshare/characterization.hpp"
#include "isoshare/family_config.hpp"

namespace isoshare::cli {

/// Technology selection collected from command-line flags; params holds only
/// the flags the user actually set.
struct FamilyOptions {
  std::string family;
  std::map<std::string, double> params;
};

/// Loads and parses a scenario file. Throws DomainError when the file cannot
/// be read or parsed, or when it contains keys outside the documented schema.
ConfigDocument load_scenario_file(const std::string& path);

/// Merges flags over the optional scenario document (flags win) into a family
/// record. Unknown parameter keys are rejected by name downstream.
FamilyConfig resolve_family_config(const FamilyOptions& options,
                                   const ConfigDocument* doc);

/// Grid and tolerance resolution: the library defaults, overridden by the
/// scenario file's [w_grid]/[r_grid]/[q_grid] sections and tolerance keys.
ScanConfig resolve_scan_config(const ConfigDocument* doc);

/// Rejects top-level keys and sections outside the documented scenario schema
/// for the given family, naming the offender.
void validate_scenario_document(const ConfigDocument& doc);

}  // namespace isoshare::cli

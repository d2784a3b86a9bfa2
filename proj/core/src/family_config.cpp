#include "isoshare/family_config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace isoshare {
namespace {

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

double lookup(const FamilyConfig& cfg, const std::string& key) {
  return cfg.params.at(key);
}

double lookup_or(const FamilyConfig& cfg, const std::string& key, double fallback) {
  const auto it = cfg.params.find(key);
  return it == cfg.params.end() ? fallback : it->second;
}

}  // namespace

bool ConfigRecord::has(const std::string& key) const { return find(key) != nullptr; }

const std::string* ConfigRecord::find(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return &v;
  }
  return nullptr;
}

const ConfigRecord* ConfigDocument::section(const std::string& name) const {
  for (const auto& [section_name, record] : sections) {
    if (section_name == name) return &record;
  }
  return nullptr;
}

ConfigDocument parse_config(std::istream& in) {
  ConfigDocument doc;
  ConfigRecord* current = &doc.top;

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::size_t comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        std::ostringstream msg;
        msg << "line " << line_number << ": unterminated section header";
        throw DomainError(msg.str());
      }
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) {
        std::ostringstream msg;
        msg << "line " << line_number << ": empty section name";
        throw DomainError(msg.str());
      }
      doc.sections.emplace_back(name, ConfigRecord{});
      current = &doc.sections.back().second;
      continue;
    }

    const std::size_t equals = line.find('=');
    if (equals == std::string::npos) {
      std::ostringstream msg;
      msg << "line " << line_number << ": expected `key = value`, got \"" << line << "\"";
      throw DomainError(msg.str());
    }
    const std::string key = trim(line.substr(0, equals));
    const std::string value = trim(line.substr(equals + 1));
    if (key.empty()) {
      std::ostringstream msg;
      msg << "line " << line_number << ": empty key";
      throw DomainError(msg.str());
    }
    if (current->has(key)) {
      std::ostringstream msg;
      msg << "line " << line_number << ": duplicate key '" << key << "'";
      throw DomainError(msg.str());
    }
    current->entries.emplace_back(key, value);
  }
  return doc;
}

double parse_number(const std::string& text, const std::string& what) {
  const std::string trimmed = trim(text);
  if (trimmed.empty()) {
    throw DomainError(what + ": empty numeric value");
  }
  char* end = nullptr;
  const double value = std::strtod(trimmed.c_str(), &end);
  if (end != trimmed.c_str() + trimmed.size()) {
    throw DomainError(what + ": '" + trimmed + "' is not a number");
  }
  return value;
}

const std::map<std::string, FamilySchema>& family_schemas() {
  static const std::map<std::string, FamilySchema> schemas = {
      {"cobb-douglas", {{"A", "alpha"}, {}}},
      {"ces", {{"A", "a", "rho"}, {}}},
      {"leontief", {{}, {{"k_coef", 1.0}, {"l_coef", 1.0}}}},
      {"perturbed", {{"A", "alpha", "c"}, {}}},
  };
  return schemas;
}

std::unique_ptr<ProductionFunction> make_production_function(const FamilyConfig& config) {
  const auto schema_it = family_schemas().find(config.family);
  if (schema_it == family_schemas().end()) {
    throw DomainError("unknown family '" + config.family +
                      "' (expected cobb-douglas, ces, leontief, or perturbed)");
  }
  const FamilySchema& schema = schema_it->second;

  const auto known = [&](const std::string& key) {
    if (std::find(schema.required.begin(), schema.required.end(), key) !=
        schema.required.end()) {
      return true;
    }
    return std::any_of(schema.optional_defaults.begin(), schema.optional_defaults.end(),
                       [&](const auto& entry) { return entry.first == key; });
  };
  for (const auto& [key, value] : config.params) {
    if (!known(key)) {
      throw DomainError("unknown parameter '" + key + "' for family '" + config.family +
                        "'");
    }
  }
  for (const std::string& key : schema.required) {
    if (config.params.find(key) == config.params.end()) {
      throw DomainError("family '" + config.family + "' requires parameter '" + key +
                        "'");
    }
  }

  if (config.family == "cobb-douglas") {
    return std::make_unique<CobbDouglas>(
        CobbDouglasParams{lookup(config, "A"), lookup(config, "alpha")});
  }
  if (config.family == "ces") {
    return std::make_unique<CES>(
        CESParams{lookup(config, "A"), lookup(config, "a"), lookup(config, "rho")});
  }
  if (config.family == "leontief") {
    return std::make_unique<Leontief>(LeontiefParams{lookup_or(config, "k_coef", 1.0),
                                                     lookup_or(config, "l_coef", 1.0)});
  }
  return std::make_unique<Perturbed>(PerturbedParams{
      CobbDouglasParams{lookup(config, "A"), lookup(config, "alpha")},
      lookup(config, "c")});
}

}  // namespace isoshare

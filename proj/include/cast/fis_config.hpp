#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "cast/fuzzy.hpp"

namespace cast {

struct NodeSpec {
  std::string name;
  std::vector<std::string> inputs;
  std::string output;
  std::vector<FuzzyRule> rules;

  bool operator==(const NodeSpec&) const = default;
};

// A set of named variables shared between nodes plus the nodes that wire
// them together. A variable may be the output of one node and an input of
// another, which is how the hierarchy is expressed.
struct FisConfig {
  std::string name;
  int version = 1;
  std::string description;
  std::vector<LinguisticVariable> variables;
  std::vector<NodeSpec> nodes;

  const LinguisticVariable& variable(const std::string& var_name) const;
  LinguisticVariable& variable(const std::string& var_name);
  const NodeSpec& node_spec(const std::string& node_name) const;

  // Materializes one node with copies of its variables. Validates the rules.
  FisNode node(const std::string& node_name) const;

  // Throws ParameterError on duplicate names or dangling references.
  void validate() const;

  bool operator==(const FisConfig&) const = default;
};

nlohmann::json to_json(const FisConfig& config);
FisConfig fis_config_from_json(const nlohmann::json& j);

FisConfig load_fis_config(const std::filesystem::path& path);
void save_fis_config(const FisConfig& config, const std::filesystem::path& path);

// Serialized text; doubles are written with round-trip precision.
std::string dump_fis_config(const FisConfig& config);

}  // namespace cast

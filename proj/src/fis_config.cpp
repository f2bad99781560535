#include "cast/fis_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cast/error.hpp"

namespace cast {

using nlohmann::json;

const LinguisticVariable& FisConfig::variable(const std::string& var_name) const {
  for (const auto& v : variables) {
    if (v.name() == var_name) return v;
  }
  throw ParameterError("config has no variable '" + var_name + "'");
}

LinguisticVariable& FisConfig::variable(const std::string& var_name) {
  for (auto& v : variables) {
    if (v.name() == var_name) return v;
  }
  throw ParameterError("config has no variable '" + var_name + "'");
}

const NodeSpec& FisConfig::node_spec(const std::string& node_name) const {
  for (const auto& n : nodes) {
    if (n.name == node_name) return n;
  }
  throw ParameterError("config has no node '" + node_name + "'");
}

FisNode FisConfig::node(const std::string& node_name) const {
  const auto& spec = node_spec(node_name);
  std::vector<LinguisticVariable> inputs;
  inputs.reserve(spec.inputs.size());
  for (const auto& in : spec.inputs) inputs.push_back(variable(in));
  return FisNode(spec.name, std::move(inputs), variable(spec.output), spec.rules);
}

void FisConfig::validate() const {
  std::set<std::string> names;
  for (const auto& v : variables) {
    if (!names.insert(v.name()).second) throw ParameterError("duplicate variable '" + v.name() + "'");
  }
  std::set<std::string> node_names;
  for (const auto& n : nodes) {
    if (!node_names.insert(n.name).second) throw ParameterError("duplicate node '" + n.name + "'");
    (void)node(n.name);
  }
}

namespace {

json bounds_to_json(const std::vector<GeneBounds>& bounds) {
  json arr = json::array();
  for (const auto& b : bounds) arr.push_back(json::array({b.lo, b.hi}));
  return arr;
}

json clause_to_json(const Clause& c) { return json{{"variable", c.variable}, {"label", c.label}}; }

Clause clause_from_json(const json& j) {
  return {j.at("variable").get<std::string>(), j.at("label").get<std::string>()};
}

}  // namespace

json to_json(const FisConfig& config) {
  json j;
  j["format"] = "cast-fis";
  j["name"] = config.name;
  j["version"] = config.version;
  if (!config.description.empty()) j["description"] = config.description;

  json vars = json::array();
  for (const auto& v : config.variables) {
    json labels = json::array();
    for (const auto& t : v.terms()) {
      json label{{"name", t.name}, {"form", to_string(t.mf.form())}, {"params", t.mf.params()}};
      if (!t.bounds.empty()) label["bounds"] = bounds_to_json(t.bounds);
      labels.push_back(std::move(label));
    }
    vars.push_back(json{{"name", v.name()}, {"universe", json::array({v.lo(), v.hi()})}, {"labels", labels}});
  }
  j["variables"] = std::move(vars);

  json nodes = json::array();
  for (const auto& n : config.nodes) {
    json rules = json::array();
    for (const auto& r : n.rules) {
      json ante = json::array();
      for (const auto& c : r.antecedent) ante.push_back(clause_to_json(c));
      json rule{{"if", ante}, {"then", clause_to_json(r.consequent)}};
      if (!r.note.empty()) rule["note"] = r.note;
      rules.push_back(std::move(rule));
    }
    nodes.push_back(json{{"name", n.name}, {"inputs", n.inputs}, {"output", n.output}, {"rules", rules}});
  }
  j["nodes"] = std::move(nodes);
  return j;
}

FisConfig fis_config_from_json(const json& j) {
  try {
    if (j.value("format", std::string{}) != "cast-fis") throw ParameterError("not a cast-fis config");
    FisConfig config;
    config.name = j.value("name", std::string{});
    config.version = j.value("version", 1);
    config.description = j.value("description", std::string{});
    for (const auto& v : j.at("variables")) {
      std::vector<Term> terms;
      for (const auto& l : v.at("labels")) {
        Term t{l.at("name").get<std::string>(),
               MembershipFunction(mf_form_from_string(l.at("form").get<std::string>()),
                                  l.at("params").get<std::vector<double>>()),
               {}};
        if (l.contains("bounds")) {
          for (const auto& b : l.at("bounds")) t.bounds.push_back({b.at(0).get<double>(), b.at(1).get<double>()});
        }
        terms.push_back(std::move(t));
      }
      const auto& u = v.at("universe");
      config.variables.emplace_back(v.at("name").get<std::string>(), u.at(0).get<double>(), u.at(1).get<double>(),
                                    std::move(terms));
    }
    for (const auto& n : j.at("nodes")) {
      NodeSpec spec;
      spec.name = n.at("name").get<std::string>();
      spec.inputs = n.at("inputs").get<std::vector<std::string>>();
      spec.output = n.at("output").get<std::string>();
      for (const auto& r : n.at("rules")) {
        FuzzyRule rule;
        for (const auto& c : r.at("if")) rule.antecedent.push_back(clause_from_json(c));
        rule.consequent = clause_from_json(r.at("then"));
        rule.note = r.value("note", std::string{});
        spec.rules.push_back(std::move(rule));
      }
      config.nodes.push_back(std::move(spec));
    }
    config.validate();
    return config;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed FIS config: ") + e.what());
  }
}

std::string dump_fis_config(const FisConfig& config) { return to_json(config).dump(2) + "\n"; }

FisConfig load_fis_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open FIS config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParameterError("cannot parse " + path.string() + ": " + e.what());
  }
  return fis_config_from_json(j);
}

void save_fis_config(const FisConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << dump_fis_config(config);
}

}  // namespace cast

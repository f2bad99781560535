#include "cast/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cast/error.hpp"

namespace cast {

std::string to_string(MfForm form) {
  switch (form) {
    case MfForm::Gaussian:
      return "gaussian";
    case MfForm::Sigmoid:
      return "sigmoid";
    case MfForm::Triangular:
      return "triangular";
  }
  return "unknown";
}

MfForm mf_form_from_string(const std::string& name) {
  if (name == "gaussian") return MfForm::Gaussian;
  if (name == "sigmoid") return MfForm::Sigmoid;
  if (name == "triangular") return MfForm::Triangular;
  throw ParameterError("unknown membership function form '" + name + "'");
}

std::size_t param_count(MfForm form) { return form == MfForm::Triangular ? 3 : 2; }

MembershipFunction::MembershipFunction(MfForm form, std::vector<double> params)
    : form_(form), params_(std::move(params)) {
  if (params_.size() != param_count(form_)) {
    throw ParameterError(to_string(form_) + " membership function needs " +
                         std::to_string(param_count(form_)) + " parameters");
  }
  for (double p : params_) {
    if (!std::isfinite(p)) throw ParameterError("membership function parameter is not finite");
  }
  switch (form_) {
    case MfForm::Gaussian:
      if (params_[0] <= 0.0) throw ParameterError("gaussian sigma must be positive");
      break;
    case MfForm::Sigmoid:
      break;
    case MfForm::Triangular:
      if (!(params_[0] <= params_[1] && params_[1] <= params_[2]) || !(params_[0] < params_[2])) {
        throw ParameterError("triangular parameters must satisfy left <= peak <= right, left < right");
      }
      break;
  }
}

MembershipFunction MembershipFunction::gaussian(double sigma, double center) {
  return {MfForm::Gaussian, {sigma, center}};
}

MembershipFunction MembershipFunction::sigmoid(double slope, double inflection) {
  return {MfForm::Sigmoid, {slope, inflection}};
}

MembershipFunction MembershipFunction::triangular(double left, double peak, double right) {
  return {MfForm::Triangular, {left, peak, right}};
}

double MembershipFunction::evaluate(double x) const {
  if (!std::isfinite(x)) throw ParameterError("membership argument is not finite");
  switch (form_) {
    case MfForm::Gaussian: {
      const double d = x - params_[1];
      return std::exp(-(d * d) / (2.0 * params_[0] * params_[0]));
    }
    case MfForm::Sigmoid:
      return 1.0 / (1.0 + std::exp(-params_[0] * (x - params_[1])));
    case MfForm::Triangular: {
      const double a = params_[0], b = params_[1], c = params_[2];
      if (x == b) return 1.0;
      if (x <= a || x >= c) return 0.0;
      if (x < b) return (x - a) / (b - a);
      return (c - x) / (c - b);
    }
  }
  return 0.0;
}

double eval_membership(const MembershipFunction& mf, double x) { return mf.evaluate(x); }

LinguisticVariable::LinguisticVariable(std::string name, double lo, double hi, std::vector<Term> terms)
    : name_(std::move(name)), lo_(lo), hi_(hi), terms_(std::move(terms)) {
  if (!std::isfinite(lo_) || !std::isfinite(hi_) || !(lo_ < hi_)) {
    throw ParameterError("variable '" + name_ + "' needs a universe with lo < hi");
  }
  if (terms_.empty()) throw ParameterError("variable '" + name_ + "' has no labels");
  std::set<std::string> seen;
  for (const auto& t : terms_) {
    if (!seen.insert(t.name).second) {
      throw ParameterError("variable '" + name_ + "' repeats label '" + t.name + "'");
    }
    if (!t.bounds.empty() && t.bounds.size() != t.mf.params().size()) {
      throw ParameterError("label '" + t.name + "' bounds do not match its parameter count");
    }
  }
}

std::size_t LinguisticVariable::term_index(const std::string& label) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].name == label) return i;
  }
  throw InputError("variable '" + name_ + "' has no label '" + label + "'");
}

bool LinguisticVariable::has_term(const std::string& label) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.name == label; });
}

double LinguisticVariable::clamp(double x) const { return std::clamp(x, lo_, hi_); }

FisNode::FisNode(std::string name, std::vector<LinguisticVariable> inputs, LinguisticVariable output,
                 std::vector<FuzzyRule> rules)
    : name_(std::move(name)), inputs_(std::move(inputs)), output_(std::move(output)), rules_(std::move(rules)) {
  if (inputs_.empty()) throw ParameterError("node '" + name_ + "' has no inputs");
  for (const auto& rule : rules_) {
    if (rule.antecedent.empty()) throw ParameterError("node '" + name_ + "' has a rule with no antecedent");
    for (const auto& clause : rule.antecedent) {
      const auto& var = inputs_[input_index(clause.variable)];
      if (!var.has_term(clause.label)) {
        throw ParameterError("rule references unknown label '" + clause.variable + "." + clause.label + "'");
      }
    }
    if (rule.consequent.variable != output_.name() || !output_.has_term(rule.consequent.label)) {
      throw ParameterError("rule consequent '" + rule.consequent.variable + "." + rule.consequent.label +
                           "' is not a label of output '" + output_.name() + "'");
    }
  }
}

std::size_t FisNode::input_index(const std::string& variable) const {
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (inputs_[i].name() == variable) return i;
  }
  throw ParameterError("node '" + name_ + "' has no input '" + variable + "'");
}

namespace {

struct Moments {
  double weighted = 0.0;
  double mass = 0.0;
};

double finish_centroid(const Moments& m, double lo, double hi) {
  return std::clamp(m.weighted / m.mass, lo, hi);
}

}  // namespace

double centroid(std::span<const Sample> samples) {
  if (samples.empty()) throw DegenerateOutputError("centroid of an empty sample set");
  Moments m;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i > 0 && !(samples[i].x > samples[i - 1].x)) {
      throw ParameterError("centroid samples must have strictly increasing x");
    }
    m.weighted += samples[i].x * samples[i].mu;
    m.mass += samples[i].mu;
  }
  if (m.mass <= 0.0) throw DegenerateOutputError("all membership degrees are zero");
  return finish_centroid(m, samples.front().x, samples.back().x);
}

CompiledNode::CompiledNode(const FisNode& node)
    : inputs_(node.inputs()),
      output_terms_(node.output().terms().size()),
      out_lo_(node.output().lo()),
      out_hi_(node.output().hi()) {
  rules_.reserve(node.rules().size());
  for (const auto& rule : node.rules()) {
    CompiledRule compiled;
    for (const auto& clause : rule.antecedent) {
      const std::size_t in = node.input_index(clause.variable);
      compiled.clauses.emplace_back(in, inputs_[in].term_index(clause.label));
    }
    compiled.consequent = node.output().term_index(rule.consequent.label);
    rules_.push_back(std::move(compiled));
  }

  grid_.resize(kCentroidSamples);
  const double step = (out_hi_ - out_lo_) / static_cast<double>(kCentroidSamples - 1);
  for (std::size_t k = 0; k < kCentroidSamples; ++k) grid_[k] = out_lo_ + step * static_cast<double>(k);
  grid_.back() = out_hi_;

  sampled_.resize(output_terms_);
  for (std::size_t t = 0; t < output_terms_; ++t) {
    const auto& mf = node.output().terms()[t].mf;
    sampled_[t].resize(kCentroidSamples);
    for (std::size_t k = 0; k < kCentroidSamples; ++k) sampled_[t][k] = mf.evaluate(grid_[k]);
  }
}

// Clipping each consequent by its rule and taking the max over rules equals
// clipping by the max firing strength per consequent label, since min and max
// distribute exactly.
std::vector<double> CompiledNode::consequent_levels(std::span<const double> inputs) const {
  if (inputs.size() != inputs_.size()) throw InputError("wrong number of inputs for fuzzy node");
  std::vector<std::vector<double>> degrees(inputs_.size());
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (!std::isfinite(inputs[i])) throw InputError("input '" + inputs_[i].name() + "' is not finite");
    const double x = inputs_[i].clamp(inputs[i]);
    const auto& terms = inputs_[i].terms();
    degrees[i].resize(terms.size());
    for (std::size_t t = 0; t < terms.size(); ++t) degrees[i][t] = terms[t].mf.evaluate(x);
  }
  std::vector<double> levels(output_terms_, 0.0);
  for (const auto& rule : rules_) {
    double strength = 1.0;
    for (const auto& [in, term] : rule.clauses) strength = std::min(strength, degrees[in][term]);
    levels[rule.consequent] = std::max(levels[rule.consequent], strength);
  }
  return levels;
}

CompiledNode::Crisp CompiledNode::evaluate(std::span<const double> inputs) const {
  const auto levels = consequent_levels(inputs);
  Moments m;
  for (std::size_t k = 0; k < kCentroidSamples; ++k) {
    double mu = 0.0;
    for (std::size_t t = 0; t < output_terms_; ++t) mu = std::max(mu, std::min(levels[t], sampled_[t][k]));
    m.weighted += grid_[k] * mu;
    m.mass += mu;
  }
  if (m.mass <= 0.0) return {0.5 * (out_lo_ + out_hi_), true};
  return {finish_centroid(m, out_lo_, out_hi_), false};
}

InferenceResult CompiledNode::evaluate_full(std::span<const double> inputs) const {
  const auto levels = consequent_levels(inputs);
  InferenceResult result;
  result.aggregate.resize(kCentroidSamples);
  for (std::size_t k = 0; k < kCentroidSamples; ++k) {
    double mu = 0.0;
    for (std::size_t t = 0; t < output_terms_; ++t) mu = std::max(mu, std::min(levels[t], sampled_[t][k]));
    result.aggregate[k] = {grid_[k], mu};
  }
  try {
    result.crisp = centroid(result.aggregate);
  } catch (const DegenerateOutputError&) {
    result.crisp = 0.5 * (out_lo_ + out_hi_);
    result.degenerate = true;
  }
  return result;
}

InferenceResult infer(const FisNode& node, const std::map<std::string, double>& inputs) {
  std::vector<double> ordered;
  ordered.reserve(node.inputs().size());
  for (const auto& var : node.inputs()) {
    auto it = inputs.find(var.name());
    if (it == inputs.end()) throw InputError("missing input '" + var.name() + "'");
    ordered.push_back(it->second);
  }
  return CompiledNode(node).evaluate_full(ordered);
}

}  // namespace cast

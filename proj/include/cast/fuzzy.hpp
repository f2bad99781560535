#pragma once

// Single-stage Mamdani inference: min conjunction, min implication,
// max aggregation and centroid defuzzification over a sampled universe.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cast {

enum class MfForm { Gaussian, Sigmoid, Triangular };

std::string to_string(MfForm form);
MfForm mf_form_from_string(const std::string& name);

// Parameter order follows the usual toolbox convention:
//   Gaussian   [sigma, center]
//   Sigmoid    [slope, inflection]
//   Triangular [left, peak, right]
class MembershipFunction {
public:
  MembershipFunction(MfForm form, std::vector<double> params);

  static MembershipFunction gaussian(double sigma, double center);
  static MembershipFunction sigmoid(double slope, double inflection);
  static MembershipFunction triangular(double left, double peak, double right);

  MfForm form() const { return form_; }
  const std::vector<double>& params() const { return params_; }

  // Degree in [0, 1]. Throws ParameterError for non-finite x.
  double evaluate(double x) const;

  bool operator==(const MembershipFunction&) const = default;

private:
  MfForm form_;
  std::vector<double> params_;
};

std::size_t param_count(MfForm form);

double eval_membership(const MembershipFunction& mf, double x);

struct GeneBounds {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const GeneBounds&) const = default;
};

struct Term {
  std::string name;
  MembershipFunction mf;
  // Optional optimizer box, one entry per parameter. Empty means "derive".
  std::vector<GeneBounds> bounds;

  bool operator==(const Term&) const = default;
};

class LinguisticVariable {
public:
  LinguisticVariable(std::string name, double lo, double hi, std::vector<Term> terms);

  const std::string& name() const { return name_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }

  // Index of a label, or throws InputError.
  std::size_t term_index(const std::string& label) const;
  bool has_term(const std::string& label) const;

  double clamp(double x) const;

  bool operator==(const LinguisticVariable&) const = default;

private:
  std::string name_;
  double lo_;
  double hi_;
  std::vector<Term> terms_;
};

struct Clause {
  std::string variable;
  std::string label;
  bool operator==(const Clause&) const = default;
};

struct FuzzyRule {
  std::vector<Clause> antecedent;  // conjunctive
  Clause consequent;
  std::string note;  // free text kept in the config file, ignored by inference

  bool operator==(const FuzzyRule&) const = default;
};

class FisNode {
public:
  FisNode(std::string name, std::vector<LinguisticVariable> inputs, LinguisticVariable output,
          std::vector<FuzzyRule> rules);

  const std::string& name() const { return name_; }
  const std::vector<LinguisticVariable>& inputs() const { return inputs_; }
  const LinguisticVariable& output() const { return output_; }
  const std::vector<FuzzyRule>& rules() const { return rules_; }

  std::size_t input_index(const std::string& variable) const;

private:
  std::string name_;
  std::vector<LinguisticVariable> inputs_;
  LinguisticVariable output_;
  std::vector<FuzzyRule> rules_;
};

inline constexpr std::size_t kCentroidSamples = 1001;

struct Sample {
  double x;
  double mu;
};

struct InferenceResult {
  double crisp = 0.0;
  // True when no rule fired; crisp is then the output universe midpoint.
  bool degenerate = false;
  std::vector<Sample> aggregate;
};

// Sum(x * mu) / Sum(mu). Throws DegenerateOutputError when every mu is zero
// and ParameterError when xs are not strictly increasing.
double centroid(std::span<const Sample> samples);

InferenceResult infer(const FisNode& node, const std::map<std::string, double>& inputs);

// Precomputed form of a FisNode: the consequent sets are sampled once on the
// output grid so repeated evaluation only touches firing strengths.
class CompiledNode {
public:
  explicit CompiledNode(const FisNode& node);

  std::size_t input_count() const { return inputs_.size(); }

  struct Crisp {
    double value;
    bool degenerate;
  };

  // Inputs in the node's declared input order. Values are clamped.
  Crisp evaluate(std::span<const double> inputs) const;
  InferenceResult evaluate_full(std::span<const double> inputs) const;

private:
  struct CompiledRule {
    std::vector<std::pair<std::size_t, std::size_t>> clauses;  // (input, term)
    std::size_t consequent;
  };

  std::vector<double> consequent_levels(std::span<const double> inputs) const;

  std::vector<LinguisticVariable> inputs_;
  std::vector<CompiledRule> rules_;
  std::size_t output_terms_ = 0;
  double out_lo_ = 0.0;
  double out_hi_ = 0.0;
  std::vector<double> grid_;
  std::vector<std::vector<double>> sampled_;  // [term][grid point]
};

}  // namespace cast

#include "cast/iwd_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cast/error.hpp"
#include "cast/scramble.hpp"

namespace cast {

std::string to_string(DifficultyCategory c) {
  switch (c) {
    case DifficultyCategory::Easy:
      return "Easy";
    case DifficultyCategory::Medium:
      return "Medium";
    case DifficultyCategory::Hard:
      return "Hard";
  }
  return "?";
}

DifficultyCategory category_from_string(std::string_view s) {
  if (s == "Easy") return DifficultyCategory::Easy;
  if (s == "Medium") return DifficultyCategory::Medium;
  if (s == "Hard") return DifficultyCategory::Hard;
  throw InputError("unknown difficulty category '" + std::string(s) + "'");
}

DifficultyCategory classify_iwd(double crisp) {
  if (crisp < 4.5) return DifficultyCategory::Easy;
  if (crisp <= 5.5) return DifficultyCategory::Medium;
  return DifficultyCategory::Hard;
}

void validate_record(const GameplayRecord& rec) {
  if (!(rec.time_taken >= 0.0) || !std::isfinite(rec.time_taken)) throw InputError("time_taken must be >= 0");
  if (rec.num_guesses < 0) throw InputError("num_guesses must be >= 0");
  if (!rec.was_skipped && rec.num_guesses < 1) throw InputError("a solved word needs at least one guess");
  if (rec.urd && (*rec.urd < 1 || *rec.urd > 10)) throw InputError("urd must be in 1..10");
  if (rec.word.size() != rec.scramble.size()) throw InputError("word and scramble differ in length");
}

FeatureVector extract_features(const GameplayRecord& rec, const FisConfig& config) {
  auto clamp = [&](std::string_view var, double x) { return config.variable(std::string(var)).clamp(x); };
  FeatureVector f;
  f.time_taken = clamp(vars::kTime, rec.time_taken);
  f.num_guesses = clamp(vars::kGuesses, static_cast<double>(rec.num_guesses));
  f.word_length = clamp(vars::kLength, static_cast<double>(rec.word.size()));
  f.degree_of_scramble = clamp(vars::kScramble, degree_of_scramble(rec.word, rec.scramble));
  f.was_skipped = clamp(vars::kSkipped, rec.was_skipped ? 1.0 : 0.0);
  return f;
}

namespace {

Term gauss(const char* name, double sigma, double center) {
  return {name, MembershipFunction::gaussian(sigma, center), {}};
}

Term sigm(const char* name, double slope, double inflection) {
  return {name, MembershipFunction::sigmoid(slope, inflection), {}};
}

Term tri(const char* name, double a, double b, double c) {
  return {name, MembershipFunction::triangular(a, b, c), {}};
}

FuzzyRule rule(std::vector<Clause> antecedent, Clause consequent, std::string note = {}) {
  return {std::move(antecedent), std::move(consequent), std::move(note)};
}

Clause is(std::string_view var, const char* label) { return {std::string(var), label}; }

}  // namespace

FisConfig default_fis_config() {
  FisConfig c;
  c.name = "cast-heuristic";
  c.version = 1;
  c.description =
      "Heuristic word-difficulty model. Rules marked 'reconstructed' come from rule-grid rows with more than one "
      "mark per variable; the leftmost mark is kept. was_skipped: 1 = skipped, which peaks the True label.";

  using V = LinguisticVariable;
  c.variables = {
      V(std::string(vars::kGuesses), 0.0, 10.0,
        {gauss("Low", 1.699, 0.0), gauss("Medium", 1.699, 5.0), gauss("High", 1.699, 10.0)}),
      V(std::string(vars::kTime), 0.0, 60.0,
        {gauss("Short", 10.19, 0.0), gauss("Medium", 10.19, 30.0), gauss("Long", 10.19, 60.0)}),
      V(std::string(vars::kSkipped), 0.0, 1.0, {tri("True", 0.99, 1.0, 1.01), tri("False", -0.01, 0.0, 0.01)}),
      V(std::string(vars::kLength), 1.0, 15.0,
        {gauss("Short", 0.85, 5.0), sigm("Long", 2.38, 6.53), gauss("Very Long", 0.85, 10.0)}),
      V(std::string(vars::kScramble), 0.0, 1.0,
        {gauss("Low", 0.1699, 0.0), sigm("High", 0.1699, 0.5), gauss("Very High", 0.1699, 1.0)}),
      V(std::string(vars::kUserEffort), 0.0, 1.0,
        {gauss("Low", 0.1699, 0.0), gauss("Medium", 0.1699, 0.5), gauss("High", 0.1699, 1.0)}),
      V(std::string(vars::kComplexity), 0.0, 1.0,
        {gauss("Low", 2.123, 0.0), gauss("Medium", 2.123, 0.5), gauss("High", 2.123, 1.0)}),
      V(std::string(vars::kIwd), 0.0, 10.0,
        {gauss("Easy", 1.0, 1.6), gauss("Medium", 1.0, 4.6), gauss("Hard", 1.5, 8.9)}),
  };

  const auto G = vars::kGuesses, T = vars::kTime, S = vars::kSkipped, L = vars::kLength, D = vars::kScramble,
             UE = vars::kUserEffort, COW = vars::kComplexity, IWD = vars::kIwd;

  c.nodes.push_back(NodeSpec{
      std::string(nodes::kUserEffort),
      {std::string(G), std::string(T)},
      std::string(UE),
      {
          rule({is(G, "Low"), is(T, "Short")}, is(UE, "Low")),
          rule({is(G, "Medium"), is(T, "Medium")}, is(UE, "Medium"),
               "reconstructed: row also marks num_guesses High"),
          rule({is(G, "High"), is(T, "Long")}, is(UE, "High")),
          rule({is(T, "Short")}, is(UE, "Low")),
          rule({is(T, "Long")}, is(UE, "High")),
      }});

  c.nodes.push_back(NodeSpec{
      std::string(nodes::kComplexity),
      {std::string(L), std::string(D)},
      std::string(COW),
      {
          rule({is(L, "Short"), is(D, "Low")}, is(COW, "Medium")),
          rule({is(L, "Long"), is(D, "Low")}, is(COW, "High")),
          rule({is(D, "Very High")}, is(COW, "Low")),
          rule({is(L, "Very Long"), is(D, "High")}, is(COW, "High")),
          rule({is(L, "Short"), is(D, "Low")}, is(COW, "Low"),
               "reconstructed: row also marks degree_of_scramble High"),
      }});

  c.nodes.push_back(NodeSpec{
      std::string(nodes::kIwd),
      {std::string(UE), std::string(COW), std::string(S)},
      std::string(IWD),
      {
          rule({is(UE, "Low"), is(S, "False")}, is(IWD, "Easy")),
          rule({is(UE, "Low"), is(COW, "Low"), is(S, "False")}, is(IWD, "Easy"),
               "reconstructed: row also marks user_effort Medium, complexity_of_word Medium and iwd Medium"),
          rule({is(UE, "Low"), is(COW, "High"), is(S, "True")}, is(IWD, "Hard")),
          rule({is(UE, "High")}, is(IWD, "Hard")),
          rule({is(UE, "Low"), is(S, "False")}, is(IWD, "Easy"), "repeats rule 1 as printed"),
          rule({is(UE, "Low"), is(COW, "High"), is(S, "False")}, is(IWD, "Medium")),
      }});

  c.validate();
  return c;
}

IwdModel::Wired IwdModel::wire(const FisConfig& config, std::string_view node,
                               std::initializer_list<std::string_view> args) {
  FisNode fis = config.node(std::string(node));
  if (fis.inputs().size() != args.size()) {
    throw ParameterError("node '" + std::string(node) + "' must have exactly " + std::to_string(args.size()) +
                         " inputs");
  }
  std::vector<std::size_t> slot;
  for (auto a : args) slot.push_back(fis.input_index(std::string(a)));
  return Wired{CompiledNode(fis), std::move(slot)};
}

CompiledNode::Crisp IwdModel::run(const Wired& w, std::initializer_list<double> args) {
  std::array<double, 3> ordered{};
  std::size_t i = 0;
  for (double a : args) ordered[w.slot[i++]] = a;
  return w.node.evaluate(std::span<const double>(ordered.data(), args.size()));
}

IwdModel::IwdModel(FisConfig config)
    : config_(std::move(config)),
      ue_(wire(config_, nodes::kUserEffort, {vars::kGuesses, vars::kTime})),
      cow_(wire(config_, nodes::kComplexity, {vars::kLength, vars::kScramble})),
      iwd_(wire(config_, nodes::kIwd, {vars::kUserEffort, vars::kComplexity, vars::kSkipped})) {}

CompiledNode::Crisp IwdModel::eval_ue(double num_guesses, double time_taken) const {
  return run(ue_, {num_guesses, time_taken});
}

CompiledNode::Crisp IwdModel::eval_cow(double word_length, double degree_of_scramble) const {
  return run(cow_, {word_length, degree_of_scramble});
}

CompiledNode::Crisp IwdModel::eval_iwd(double user_effort, double complexity, double was_skipped) const {
  return run(iwd_, {user_effort, complexity, was_skipped});
}

double IwdModel::compute_ue(double num_guesses, double time_taken) const {
  return eval_ue(num_guesses, time_taken).value;
}

double IwdModel::compute_cow(double word_length, double degree_of_scramble) const {
  return eval_cow(word_length, degree_of_scramble).value;
}

double IwdModel::compute_iwd(double user_effort, double complexity, double was_skipped) const {
  return eval_iwd(user_effort, complexity, was_skipped).value;
}

IwdScore IwdModel::score(const FeatureVector& f) const {
  const auto ue = eval_ue(f.num_guesses, f.time_taken);
  const auto cow = eval_cow(f.word_length, f.degree_of_scramble);
  const auto iwd = eval_iwd(ue.value, cow.value, f.was_skipped);
  return {ue.value, cow.value, iwd.value, classify_iwd(iwd.value), ue.degenerate || cow.degenerate || iwd.degenerate};
}

IwdScore IwdModel::score(const GameplayRecord& rec) const { return score(extract_features(rec, config_)); }

}  // namespace cast

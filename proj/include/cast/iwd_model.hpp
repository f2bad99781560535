#pragma once

// The two-layer word-difficulty model: User Effort and Complexity of Word
// nodes feed their crisp outputs, together with the skip flag, into the
// final IWD node.

#include <optional>
#include <string>
#include <string_view>

#include "cast/fis_config.hpp"
#include "cast/fuzzy.hpp"

namespace cast {

namespace vars {
inline constexpr std::string_view kGuesses = "num_guesses";
inline constexpr std::string_view kTime = "time_taken";
inline constexpr std::string_view kSkipped = "was_skipped";
inline constexpr std::string_view kLength = "word_length";
inline constexpr std::string_view kScramble = "degree_of_scramble";
inline constexpr std::string_view kUserEffort = "user_effort";
inline constexpr std::string_view kComplexity = "complexity_of_word";
inline constexpr std::string_view kIwd = "iwd";
}  // namespace vars

namespace nodes {
inline constexpr std::string_view kUserEffort = "ue";
inline constexpr std::string_view kComplexity = "cow";
inline constexpr std::string_view kIwd = "iwd";
}  // namespace nodes

enum class DifficultyCategory { Easy = 0, Medium = 1, Hard = 2 };

inline constexpr int kCategoryCount = 3;

std::string to_string(DifficultyCategory c);
DifficultyCategory category_from_string(std::string_view s);

// < 4.5 Easy, [4.5, 5.5] Medium, > 5.5 Hard.
DifficultyCategory classify_iwd(double crisp);

struct GameplayRecord {
  std::string participant_id;
  std::string session_id;
  std::string word;
  std::string scramble;
  double time_taken = 0.0;
  int num_guesses = 0;
  bool was_skipped = false;
  std::optional<int> urd;
  int presentation_index = 0;
  // Attached by live play; absent in synthetic or imported data.
  std::optional<double> iwd_crisp;
  std::optional<DifficultyCategory> iwd_category;

  bool operator==(const GameplayRecord&) const = default;
};

// Throws InputError when a record breaks its invariants
// (negative time or guesses, solved with zero guesses, urd outside 1..10).
void validate_record(const GameplayRecord& rec);

struct FeatureVector {
  double time_taken = 0.0;
  double num_guesses = 0.0;
  double word_length = 0.0;
  double degree_of_scramble = 0.0;
  double was_skipped = 0.0;

  bool operator==(const FeatureVector&) const = default;
};

// Word length counts letters; every value is clamped to its variable's universe.
FeatureVector extract_features(const GameplayRecord& rec, const FisConfig& config);

// Heuristic membership functions and the 16-rule base.
FisConfig default_fis_config();

struct IwdScore {
  double user_effort = 0.0;
  double complexity = 0.0;
  double iwd = 0.0;
  DifficultyCategory category = DifficultyCategory::Easy;
  bool degenerate = false;
};

// Immutable once constructed; all scoring methods are const and thread-safe.
class IwdModel {
public:
  explicit IwdModel(FisConfig config);

  const FisConfig& config() const { return config_; }

  double compute_ue(double num_guesses, double time_taken) const;
  double compute_cow(double word_length, double degree_of_scramble) const;
  double compute_iwd(double user_effort, double complexity, double was_skipped) const;

  IwdScore score(const FeatureVector& features) const;
  IwdScore score(const GameplayRecord& rec) const;

  // Lower-level evaluation used by the optimizer's cached fitness path.
  CompiledNode::Crisp eval_ue(double num_guesses, double time_taken) const;
  CompiledNode::Crisp eval_cow(double word_length, double degree_of_scramble) const;
  CompiledNode::Crisp eval_iwd(double user_effort, double complexity, double was_skipped) const;

private:
  struct Wired {
    CompiledNode node;
    // Position of each canonical argument within the node's declared inputs.
    std::vector<std::size_t> slot;
  };
  static Wired wire(const FisConfig& config, std::string_view node, std::initializer_list<std::string_view> args);
  static CompiledNode::Crisp run(const Wired& w, std::initializer_list<double> args);

  FisConfig config_;
  Wired ue_;
  Wired cow_;
  Wired iwd_;
};

}  // namespace cast

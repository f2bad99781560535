#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "cast/fis_config.hpp"
#include "cast/ga.hpp"
#include "cast/iwd_model.hpp"

namespace cast {

// 1-4 Easy, 5 Medium, 6-10 Hard. Throws InputError outside 1..10.
DifficultyCategory map_urd(int urd);

// Rows are the true category, columns the predicted one.
struct ConfusionMatrix {
  std::array<std::array<long, kCategoryCount>, kCategoryCount> counts{};

  void add(DifficultyCategory truth, DifficultyCategory predicted);
  long at(DifficultyCategory truth, DifficultyCategory predicted) const;
  long total() const;
  long row_sum(DifficultyCategory truth) const;
  long column_sum(DifficultyCategory predicted) const;
  long trace() const;

  bool operator==(const ConfusionMatrix&) const = default;
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  // Set when any of the three had a zero denominator and was reported as 0.
  bool degenerate = false;
};

ClassMetrics prf(const ConfusionMatrix& cm, DifficultyCategory cls);

struct EvaluationReport {
  ConfusionMatrix confusion;
  std::array<ClassMetrics, kCategoryCount> per_class{};

  const ClassMetrics& operator[](DifficultyCategory c) const { return per_class[static_cast<int>(c)]; }
};

EvaluationReport make_report(const ConfusionMatrix& cm);

using Predictor = std::function<DifficultyCategory(const GameplayRecord&)>;

// Records without a URD are skipped. Throws InputError when nothing is left.
EvaluationReport resubstitution(const Predictor& predict, const std::vector<GameplayRecord>& records);
EvaluationReport resubstitution(const IwdModel& model, const std::vector<GameplayRecord>& records);

enum class FoldMode { PerRecord, PerParticipant, PerWord };

std::string to_string(FoldMode mode);
FoldMode fold_mode_from_string(const std::string& s);

// Index groups of URD-carrying records, one per held-out unit, in order of
// first appearance. Per-word units are (word, scramble) tasks.
std::vector<std::vector<std::size_t>> make_folds(const std::vector<GameplayRecord>& rated, FoldMode mode);

// Fits a config on training records.
using Trainer = std::function<FisConfig(const FisConfig& tmpl, const std::vector<GameplayRecord>& train)>;

// Returns the template untouched.
Trainer heuristic_trainer();
Trainer ga_trainer(GaSettings settings);

// Throws InputError when the chosen mode yields fewer than two folds.
EvaluationReport leave_one_out(const FisConfig& tmpl, const std::vector<GameplayRecord>& records, FoldMode mode,
                               const Trainer& trainer);

// Resubstitution and leave-one-out blocks side by side, Easy/Medium/Hard
// columns, Precision/Recall/F Measure rows.
std::string format_report_table(const EvaluationReport& resub, const EvaluationReport& loo);
std::string format_report_csv(const EvaluationReport& resub, const EvaluationReport& loo);

}  // namespace cast

#include "cast/evaluation.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include "cast/error.hpp"
#include "cast/records.hpp"

namespace cast {

namespace {

constexpr std::array<DifficultyCategory, kCategoryCount> kCategories{
    DifficultyCategory::Easy, DifficultyCategory::Medium, DifficultyCategory::Hard};

int idx(DifficultyCategory c) { return static_cast<int>(c); }

}  // namespace

DifficultyCategory map_urd(int urd) {
  if (urd < 1 || urd > 10) throw InputError("urd " + std::to_string(urd) + " is outside 1..10");
  if (urd <= 4) return DifficultyCategory::Easy;
  if (urd == 5) return DifficultyCategory::Medium;
  return DifficultyCategory::Hard;
}

void ConfusionMatrix::add(DifficultyCategory truth, DifficultyCategory predicted) {
  ++counts[idx(truth)][idx(predicted)];
}

long ConfusionMatrix::at(DifficultyCategory truth, DifficultyCategory predicted) const {
  return counts[idx(truth)][idx(predicted)];
}

long ConfusionMatrix::total() const {
  long t = 0;
  for (const auto& row : counts)
    for (long v : row) t += v;
  return t;
}

long ConfusionMatrix::row_sum(DifficultyCategory truth) const {
  long t = 0;
  for (long v : counts[idx(truth)]) t += v;
  return t;
}

long ConfusionMatrix::column_sum(DifficultyCategory predicted) const {
  long t = 0;
  for (const auto& row : counts) t += row[idx(predicted)];
  return t;
}

long ConfusionMatrix::trace() const {
  long t = 0;
  for (int i = 0; i < kCategoryCount; ++i) t += counts[i][i];
  return t;
}

ClassMetrics prf(const ConfusionMatrix& cm, DifficultyCategory cls) {
  ClassMetrics m;
  const auto tp = static_cast<double>(cm.at(cls, cls));
  const auto predicted = static_cast<double>(cm.column_sum(cls));
  const auto actual = static_cast<double>(cm.row_sum(cls));
  if (predicted > 0) {
    m.precision = tp / predicted;
  } else {
    m.degenerate = true;
  }
  if (actual > 0) {
    m.recall = tp / actual;
  } else {
    m.degenerate = true;
  }
  if (m.precision + m.recall > 0.0) {
    m.f_measure = 2.0 * m.precision * m.recall / (m.precision + m.recall);
  } else {
    m.degenerate = true;
  }
  return m;
}

EvaluationReport make_report(const ConfusionMatrix& cm) {
  EvaluationReport r;
  r.confusion = cm;
  for (auto c : kCategories) r.per_class[idx(c)] = prf(cm, c);
  return r;
}

EvaluationReport resubstitution(const Predictor& predict, const std::vector<GameplayRecord>& records) {
  ConfusionMatrix cm;
  for (const auto& rec : records) {
    if (!rec.urd) continue;
    cm.add(map_urd(*rec.urd), predict(rec));
  }
  if (cm.total() == 0) throw InputError("evaluation needs at least one rated record");
  return make_report(cm);
}

EvaluationReport resubstitution(const IwdModel& model, const std::vector<GameplayRecord>& records) {
  return resubstitution([&](const GameplayRecord& r) { return model.score(r).category; }, records);
}

std::string to_string(FoldMode mode) {
  switch (mode) {
    case FoldMode::PerRecord:
      return "record";
    case FoldMode::PerParticipant:
      return "participant";
    case FoldMode::PerWord:
      return "word";
  }
  return "?";
}

FoldMode fold_mode_from_string(const std::string& s) {
  if (s == "record") return FoldMode::PerRecord;
  if (s == "participant") return FoldMode::PerParticipant;
  if (s == "word") return FoldMode::PerWord;
  throw InputError("unknown leave-one-out mode '" + s + "' (record, participant, word)");
}

std::vector<std::vector<std::size_t>> make_folds(const std::vector<GameplayRecord>& rated, FoldMode mode) {
  std::vector<std::vector<std::size_t>> folds;
  std::map<std::string, std::size_t> unit_of;
  for (std::size_t i = 0; i < rated.size(); ++i) {
    std::string key;
    switch (mode) {
      case FoldMode::PerRecord:
        key = std::to_string(i);
        break;
      case FoldMode::PerParticipant:
        key = rated[i].participant_id;
        break;
      case FoldMode::PerWord:
        key = rated[i].word + "/" + rated[i].scramble;
        break;
    }
    auto [it, inserted] = unit_of.emplace(key, folds.size());
    if (inserted) folds.emplace_back();
    folds[it->second].push_back(i);
  }
  return folds;
}

Trainer heuristic_trainer() {
  return [](const FisConfig& tmpl, const std::vector<GameplayRecord>&) { return tmpl; };
}

Trainer ga_trainer(GaSettings settings) {
  return [settings](const FisConfig& tmpl, const std::vector<GameplayRecord>& train) {
    return run_ga(settings, tmpl, train).best_config;
  };
}

EvaluationReport leave_one_out(const FisConfig& tmpl, const std::vector<GameplayRecord>& records, FoldMode mode,
                               const Trainer& trainer) {
  const auto rated = rated_only(records);
  const auto folds = make_folds(rated, mode);
  if (folds.size() < 2) throw InputError("leave-one-out needs at least two units, got " + std::to_string(folds.size()));

  std::vector<bool> held(rated.size());
  ConfusionMatrix cm;
  for (const auto& fold : folds) {
    std::fill(held.begin(), held.end(), false);
    for (auto i : fold) held[i] = true;
    std::vector<GameplayRecord> train;
    train.reserve(rated.size() - fold.size());
    for (std::size_t i = 0; i < rated.size(); ++i) {
      if (!held[i]) train.push_back(rated[i]);
    }
    const IwdModel model(trainer(tmpl, train));
    for (auto i : fold) cm.add(map_urd(*rated[i].urd), model.score(rated[i]).category);
  }
  return make_report(cm);
}

namespace {

struct Row {
  const char* name;
  double ClassMetrics::*field;
};

constexpr Row kRows[] = {{"Precision", &ClassMetrics::precision},
                         {"Recall", &ClassMetrics::recall},
                         {"F Measure", &ClassMetrics::f_measure}};

}  // namespace

std::string format_report_table(const EvaluationReport& resub, const EvaluationReport& loo) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << std::left << std::setw(11) << "" << std::setw(24) << "Resubstitution" << "Leave-One-Out\n";
  out << std::setw(11) << "";
  for (int block = 0; block < 2; ++block) {
    for (auto c : kCategories) out << std::setw(8) << to_string(c);
  }
  out << '\n';
  for (const auto& row : kRows) {
    out << std::setw(11) << row.name;
    for (const auto* rep : {&resub, &loo}) {
      for (auto c : kCategories) out << std::setw(8) << (*rep)[c].*row.field;
    }
    out << '\n';
  }
  out << "n = " << resub.confusion.total() << " rated records\n";
  return out.str();
}

std::string format_report_csv(const EvaluationReport& resub, const EvaluationReport& loo) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "metric,resub_easy,resub_medium,resub_hard,loo_easy,loo_medium,loo_hard\n";
  for (const auto& row : kRows) {
    out << row.name;
    for (const auto* rep : {&resub, &loo}) {
      for (auto c : kCategories) out << ',' << (*rep)[c].*row.field;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cast

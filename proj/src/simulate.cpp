#include "cast/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "cast/error.hpp"
#include "cast/rng.hpp"
#include "cast/scramble.hpp"

namespace cast {

double AbilityModel::skip_probability(double gap) const {
  return 1.0 / (1.0 + std::exp(-skip_slope * (gap - skip_offset)));
}

std::vector<GameplayRecord> simulate_participants(int n, std::uint64_t seed, const AbilityModel& model,
                                                  const std::vector<WordTask>& tasks) {
  if (n < 1) throw InputError("simulate: need at least one participant");
  if (tasks.empty()) throw InputError("simulate: empty task list");
  Rng rng(seed);

  // Draw order: word offsets, then per participant its ability followed by
  // per task skip, guesses, time, URD noise and URD-missing draws.
  std::vector<double> complexity;
  complexity.reserve(tasks.size());
  for (const auto& t : tasks) {
    const double len = static_cast<double>(t.word.size());
    const double s = degree_of_scramble(t.word, t.scramble);
    complexity.push_back(model.length_weight * (len - model.reference_length) +
                         model.scramble_weight * (s - model.reference_scramble) +
                         rng.normal(0.0, model.word_offset_sd));
  }

  std::vector<GameplayRecord> records;
  records.reserve(static_cast<std::size_t>(n) * tasks.size());
  for (int p = 1; p <= n; ++p) {
    const std::string pid = "p" + std::string(p < 10 ? "0" : "") + std::to_string(p);
    const double ability = rng.normal(model.ability_mean, model.ability_sd);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const double gap = complexity[i] - ability;
      GameplayRecord rec;
      rec.participant_id = pid;
      rec.session_id = "sim-" + pid;
      rec.word = tasks[i].word;
      rec.scramble = tasks[i].scramble;
      rec.presentation_index = tasks[i].position;

      rec.was_skipped = rng.bernoulli(model.skip_probability(gap));
      const int wrong = rng.poisson(model.guess_rate_at_zero * std::exp(model.guess_gap_weight * gap));
      rec.num_guesses = std::min(rec.was_skipped ? wrong : wrong + 1, 20);

      double log_time = std::log(model.base_time) + model.time_gap_weight * gap + rng.normal(0.0, model.time_noise_sd);
      if (rec.was_skipped) log_time += 0.3;
      rec.time_taken = std::exp(log_time);

      double urd = model.urd_center + model.urd_gap_weight * gap + rng.normal(0.0, model.urd_noise_sd);
      if (rec.was_skipped) urd += model.urd_skip_bonus;
      const int rating = std::clamp(static_cast<int>(std::lround(urd)), 1, 10);
      if (!rng.bernoulli(model.missing_urd_probability)) rec.urd = rating;

      records.push_back(std::move(rec));
    }
  }
  return records;
}

}  // namespace cast

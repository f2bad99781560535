#pragma once

#include <cstdint>
#include <vector>

#include "cast/iwd_model.hpp"
#include "cast/word_tasks.hpp"

namespace cast {

// Latent-trait generator for synthetic play. Each participant draws an
// ability; each task gets a complexity from its length and degree of
// scramble plus a per-word offset. Every observable grows with
// gap = complexity - ability.
struct AbilityModel {
  double ability_mean = 0.0;
  double ability_sd = 1.0;

  double length_weight = 0.45;    // per letter above reference_length
  double reference_length = 7.0;
  double scramble_weight = 2.0;   // per unit of degree of scramble above reference_scramble
  double reference_scramble = 0.75;
  double word_offset_sd = 0.5;

  double skip_slope = 1.5;
  double skip_offset = 2.0;       // gap at which skipping is a coin flip

  double base_time = 12.0;        // seconds at gap 0
  double time_gap_weight = 0.5;   // log-seconds per unit gap
  double time_noise_sd = 0.35;

  double guess_rate_at_zero = 1.0;  // extra wrong guesses expected at gap 0
  double guess_gap_weight = 0.4;

  double urd_center = 5.0;
  double urd_gap_weight = 1.8;
  double urd_noise_sd = 1.2;
  double urd_skip_bonus = 1.5;

  double missing_urd_probability = 24.0 / 1344.0;

  double skip_probability(double gap) const;
};

// Participants are named p01, p02, ... Records come out participant-major in
// task order. Deterministic for a seed.
std::vector<GameplayRecord> simulate_participants(int n, std::uint64_t seed, const AbilityModel& model,
                                                  const std::vector<WordTask>& tasks);

}  // namespace cast

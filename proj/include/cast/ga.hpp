#pragma once

// Real-coded genetic algorithm that tunes membership-function parameters to
// minimize the squared error between crisp IWD and user-rated difficulty.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cast/fis_config.hpp"
#include "cast/iwd_model.hpp"
#include "cast/rng.hpp"

namespace cast {

// Gene order: config variables in declaration order, skipping was_skipped;
// within a variable, labels in order; within a label, parameters in order.
struct GeneRef {
  std::size_t variable;
  std::size_t term;
  std::size_t param;
};

bool is_tunable(const LinguisticVariable& var);

// Box for one parameter when the config does not record one: locations move
// within +-50% of the universe width, clipped to the universe; gaussian
// widths within +-50% of the width but never below 1% of it; sigmoid slopes
// within [0.5, 1.5] times their value.
GeneBounds default_bounds(const LinguisticVariable& var, const Term& term, std::size_t param);

class ChromosomeLayout {
public:
  static ChromosomeLayout from_config(const FisConfig& config);

  std::size_t size() const { return refs_.size(); }
  const std::vector<GeneRef>& refs() const { return refs_; }
  const std::vector<GeneBounds>& bounds() const { return bounds_; }
  // e.g. "time_taken.Short[1]"
  std::string describe(const FisConfig& config, std::size_t gene) const;

private:
  std::vector<GeneRef> refs_;
  std::vector<GeneBounds> bounds_;
};

class Chromosome {
public:
  // Throws LayoutError if sizes differ or any gene lies outside its bounds.
  Chromosome(std::vector<double> genes, std::vector<GeneBounds> bounds);

  const std::vector<double>& genes() const { return genes_; }
  const std::vector<GeneBounds>& bounds() const { return bounds_; }
  std::size_t size() const { return genes_.size(); }

  bool operator==(const Chromosome&) const = default;

private:
  std::vector<double> genes_;
  std::vector<GeneBounds> bounds_;
};

Chromosome encode(const FisConfig& config);

// Writes genes back into a copy of the template. Everything not covered by
// the layout (rules, universes, was_skipped, recorded bounds) is preserved.
// Triangular parameters are re-sorted so left <= peak <= right.
FisConfig decode(const Chromosome& chromosome, const FisConfig& tmpl);

// Copy of the config with every tunable label's bounds written out explicitly.
FisConfig with_recorded_bounds(const FisConfig& config);

// Feature vectors computed once per dataset; valid for any chromosome of the
// same template since universes are never tuned.
class PreparedDataset {
public:
  PreparedDataset(const std::vector<GameplayRecord>& records, const FisConfig& tmpl);

  std::size_t size() const { return features_.size(); }

private:
  friend double fitness(const IwdModel& model, const PreparedDataset& data);

  std::vector<FeatureVector> features_;
  std::vector<double> urd_;
  std::vector<std::size_t> word_slot_;                 // record -> unique (length, scramble)
  std::vector<std::pair<double, double>> word_inputs_;
};

// Sum of squared (crisp IWD - URD). Errors are summed in ascending order so
// the value does not depend on record order. Throws InputError for an empty
// dataset or a record without URD.
double fitness(const Chromosome& chromosome, const FisConfig& tmpl, const std::vector<GameplayRecord>& records);
double fitness(const IwdModel& model, const PreparedDataset& data);

struct GaSettings {
  std::size_t population_size = 200;
  std::size_t max_generations = 100;  // including the initial population
  std::size_t stall_generations = 20;  // 0 disables the stall test
  double stall_tolerance = 1e-6;
  std::size_t elite_count = 2;
  double crossover_fraction = 0.8;
  double initial_step = 0.01;
  double step_growth = 1.1;
  double step_shrink = 0.7;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency

  // Throws InputError when population_size < 2 or elite_count >= population_size.
  void validate() const;
};

struct GenerationStats {
  std::size_t generation;
  double best;
  double mean;
  double step;
};

struct GaResult {
  FisConfig best_config;
  Chromosome best;
  double best_fitness;
  std::vector<GenerationStats> history;
  bool stalled = false;
};

// Called after each generation is evaluated. Population rows are gene vectors.
using GenerationObserver = std::function<void(std::size_t generation, std::span<const std::vector<double>> population,
                                              std::span<const double> fitness)>;

// Individual 0 of the initial population is the template itself, the rest
// are uniform within bounds. Each later generation keeps elite_count best
// individuals, fills crossover_fraction of the rest with scattered crossover
// children and the remainder with adaptive feasible mutants; parents come
// from stochastic uniform selection over rank scores.
GaResult run_ga(const GaSettings& settings, const FisConfig& tmpl, const std::vector<GameplayRecord>& dataset,
                const GenerationObserver& observer = {});

namespace ga_ops {

// Score for each position of a fitness-sorted population (index 0 = best),
// proportional to 1/sqrt(rank) and normalized to sum to 1.
std::vector<double> rank_scale(std::size_t population);

// Walks `count` equal steps along the cumulative score line starting at
// phase * step, phase in [0, 1). Returns selected positions.
std::vector<std::size_t> stochastic_uniform_select(std::span<const double> scores, std::size_t count, double phase);

// mask[i] != 0 takes a[i], otherwise b[i].
std::vector<double> scattered_crossover(std::span<const double> a, std::span<const double> b,
                                        std::span<const std::uint8_t> mask);

// Moves along a uniformly random direction, each gene scaled by step times
// its bound range, and shortens the move so the child stays within bounds.
std::vector<double> adaptive_feasible_mutate(std::span<const double> parent, std::span<const GeneBounds> bounds,
                                             double step, Rng& rng);

}  // namespace ga_ops

}  // namespace cast

#include "cast/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "cast/error.hpp"

namespace cast {

bool is_tunable(const LinguisticVariable& var) { return var.name() != vars::kSkipped; }

GeneBounds default_bounds(const LinguisticVariable& var, const Term& term, std::size_t param) {
  const double v = term.mf.params().at(param);
  const double w = var.width();
  GeneBounds b;
  const bool is_width = term.mf.form() == MfForm::Gaussian && param == 0;
  const bool is_slope = term.mf.form() == MfForm::Sigmoid && param == 0;
  if (is_width) {
    b = {std::max(v - 0.5 * w, 0.01 * w), v + 0.5 * w};
  } else if (is_slope) {
    b = v == 0.0 ? GeneBounds{-4.0 / w, 4.0 / w} : GeneBounds{std::min(0.5 * v, 1.5 * v), std::max(0.5 * v, 1.5 * v)};
  } else {
    b = {std::max(var.lo(), v - 0.5 * w), std::min(var.hi(), v + 0.5 * w)};
  }
  b.lo = std::min(b.lo, v);
  b.hi = std::max(b.hi, v);
  return b;
}

ChromosomeLayout ChromosomeLayout::from_config(const FisConfig& config) {
  ChromosomeLayout layout;
  for (std::size_t v = 0; v < config.variables.size(); ++v) {
    const auto& var = config.variables[v];
    if (!is_tunable(var)) continue;
    for (std::size_t t = 0; t < var.terms().size(); ++t) {
      const auto& term = var.terms()[t];
      for (std::size_t p = 0; p < term.mf.params().size(); ++p) {
        layout.refs_.push_back({v, t, p});
        layout.bounds_.push_back(term.bounds.empty() ? default_bounds(var, term, p) : term.bounds[p]);
      }
    }
  }
  return layout;
}

std::string ChromosomeLayout::describe(const FisConfig& config, std::size_t gene) const {
  const auto& r = refs_.at(gene);
  const auto& var = config.variables.at(r.variable);
  return var.name() + "." + var.terms().at(r.term).name + "[" + std::to_string(r.param) + "]";
}

Chromosome::Chromosome(std::vector<double> genes, std::vector<GeneBounds> bounds)
    : genes_(std::move(genes)), bounds_(std::move(bounds)) {
  if (genes_.size() != bounds_.size()) throw LayoutError("gene and bound counts differ");
  for (std::size_t i = 0; i < genes_.size(); ++i) {
    if (!(bounds_[i].lo <= bounds_[i].hi)) throw LayoutError("gene " + std::to_string(i) + " has an empty box");
    if (!(genes_[i] >= bounds_[i].lo && genes_[i] <= bounds_[i].hi)) {
      throw LayoutError("gene " + std::to_string(i) + " lies outside its bounds");
    }
  }
}

Chromosome encode(const FisConfig& config) {
  const auto layout = ChromosomeLayout::from_config(config);
  std::vector<double> genes;
  genes.reserve(layout.size());
  for (const auto& r : layout.refs()) {
    genes.push_back(config.variables[r.variable].terms()[r.term].mf.params()[r.param]);
  }
  return Chromosome(std::move(genes), layout.bounds());
}

namespace {

FisConfig decode_genes(std::span<const double> genes, const ChromosomeLayout& layout, const FisConfig& tmpl) {
  if (genes.size() != layout.size()) {
    throw LayoutError("chromosome has " + std::to_string(genes.size()) + " genes, layout expects " +
                      std::to_string(layout.size()));
  }
  FisConfig out = tmpl;
  std::size_t i = 0;
  while (i < genes.size()) {
    const auto& first = layout.refs()[i];
    Term& term = out.variables[first.variable].mutable_terms()[first.term];
    std::vector<double> params = term.mf.params();
    while (i < genes.size() && layout.refs()[i].variable == first.variable && layout.refs()[i].term == first.term) {
      params[layout.refs()[i].param] = genes[i];
      ++i;
    }
    if (term.mf.form() == MfForm::Triangular) std::sort(params.begin(), params.end());
    try {
      term.mf = MembershipFunction(term.mf.form(), std::move(params));
    } catch (const ParameterError& e) {
      throw LayoutError(std::string("decoded parameters are invalid: ") + e.what());
    }
  }
  return out;
}

}  // namespace

FisConfig decode(const Chromosome& chromosome, const FisConfig& tmpl) {
  return decode_genes(chromosome.genes(), ChromosomeLayout::from_config(tmpl), tmpl);
}

FisConfig with_recorded_bounds(const FisConfig& config) {
  FisConfig out = config;
  for (auto& var : out.variables) {
    if (!is_tunable(var)) continue;
    for (auto& term : var.mutable_terms()) {
      if (!term.bounds.empty()) continue;
      for (std::size_t p = 0; p < term.mf.params().size(); ++p) term.bounds.push_back(default_bounds(var, term, p));
    }
  }
  return out;
}

PreparedDataset::PreparedDataset(const std::vector<GameplayRecord>& records, const FisConfig& tmpl) {
  if (records.empty()) throw InputError("fitness needs a non-empty dataset");
  std::map<std::pair<double, double>, std::size_t> slots;
  for (const auto& rec : records) {
    if (!rec.urd) throw InputError("fitness needs every record to carry a URD");
    const auto f = extract_features(rec, tmpl);
    const std::pair<double, double> key{f.word_length, f.degree_of_scramble};
    auto [it, inserted] = slots.emplace(key, word_inputs_.size());
    if (inserted) word_inputs_.push_back(key);
    word_slot_.push_back(it->second);
    features_.push_back(f);
    urd_.push_back(static_cast<double>(*rec.urd));
  }
}

double fitness(const IwdModel& model, const PreparedDataset& data) {
  std::vector<double> cow(data.word_inputs_.size());
  for (std::size_t w = 0; w < cow.size(); ++w) {
    cow[w] = model.eval_cow(data.word_inputs_[w].first, data.word_inputs_[w].second).value;
  }
  std::vector<double> sq(data.features_.size());
  for (std::size_t i = 0; i < sq.size(); ++i) {
    const auto& f = data.features_[i];
    const double ue = model.eval_ue(f.num_guesses, f.time_taken).value;
    const double iwd = model.eval_iwd(ue, cow[data.word_slot_[i]], f.was_skipped).value;
    const double e = iwd - data.urd_[i];
    sq[i] = e * e;
  }
  std::sort(sq.begin(), sq.end());
  double sum = 0.0;
  for (double v : sq) sum += v;
  return sum;
}

double fitness(const Chromosome& chromosome, const FisConfig& tmpl, const std::vector<GameplayRecord>& records) {
  const PreparedDataset data(records, tmpl);
  return fitness(IwdModel(decode(chromosome, tmpl)), data);
}

void GaSettings::validate() const {
  if (population_size < 2) throw InputError("population_size must be at least 2");
  if (elite_count >= population_size) throw InputError("elite_count must be below population_size");
  if (max_generations < 1) throw InputError("max_generations must be at least 1");
  if (!(crossover_fraction >= 0.0 && crossover_fraction <= 1.0)) throw InputError("crossover_fraction outside [0,1]");
  if (!(initial_step > 0.0)) throw InputError("initial_step must be positive");
}

namespace ga_ops {

std::vector<double> rank_scale(std::size_t population) {
  std::vector<double> scores(population);
  double total = 0.0;
  for (std::size_t i = 0; i < population; ++i) {
    scores[i] = 1.0 / std::sqrt(static_cast<double>(i + 1));
    total += scores[i];
  }
  for (auto& s : scores) s /= total;
  return scores;
}

std::vector<std::size_t> stochastic_uniform_select(std::span<const double> scores, std::size_t count, double phase) {
  if (scores.empty() || count == 0) return {};
  double total = 0.0;
  for (double s : scores) total += s;
  const double step = total / static_cast<double>(count);
  std::vector<std::size_t> picks;
  picks.reserve(count);
  std::size_t idx = 0;
  double cumulative = scores[0];
  for (std::size_t k = 0; k < count; ++k) {
    const double pointer = (phase + static_cast<double>(k)) * step;
    while (pointer >= cumulative && idx + 1 < scores.size()) cumulative += scores[++idx];
    picks.push_back(idx);
  }
  return picks;
}

std::vector<double> scattered_crossover(std::span<const double> a, std::span<const double> b,
                                        std::span<const std::uint8_t> mask) {
  if (a.size() != b.size() || a.size() != mask.size()) throw LayoutError("crossover operands differ in size");
  std::vector<double> child(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) child[i] = mask[i] ? a[i] : b[i];
  return child;
}

std::vector<double> adaptive_feasible_mutate(std::span<const double> parent, std::span<const GeneBounds> bounds,
                                             double step, Rng& rng) {
  const std::size_t n = parent.size();
  if (bounds.size() != n) throw LayoutError("mutation bounds do not match the parent");
  std::vector<double> dir(n);
  double norm = 0.0;
  for (auto& d : dir) {
    d = rng.normal();
    norm += d * d;
  }
  norm = std::sqrt(norm);
  std::vector<double> delta(n, 0.0);
  if (norm > 0.0) {
    // sqrt(n) keeps the per-gene RMS move at step * range.
    const double scale = step * std::sqrt(static_cast<double>(n)) / norm;
    for (std::size_t i = 0; i < n; ++i) delta[i] = scale * dir[i] * (bounds[i].hi - bounds[i].lo);
  }

  auto max_fraction = [&](double sign) {
    double t = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = sign * delta[i];
      if (d > 0.0) t = std::min(t, (bounds[i].hi - parent[i]) / d);
      if (d < 0.0) t = std::min(t, (bounds[i].lo - parent[i]) / d);
    }
    return std::max(t, 0.0);
  };
  double sign = 1.0;
  double t = max_fraction(sign);
  if (t == 0.0) {
    sign = -1.0;
    t = max_fraction(sign);
  }
  std::vector<double> child(parent.begin(), parent.end());
  for (std::size_t i = 0; i < n; ++i) {
    child[i] = std::clamp(parent[i] + sign * t * delta[i], bounds[i].lo, bounds[i].hi);
  }
  return child;
}

}  // namespace ga_ops

namespace {

std::vector<double> evaluate_population(const std::vector<std::vector<double>>& population,
                                        const ChromosomeLayout& layout, const FisConfig& tmpl,
                                        const PreparedDataset& data, unsigned threads) {
  std::vector<double> scores(population.size());
  auto work = [&](std::size_t i) {
    try {
      scores[i] = fitness(IwdModel(decode_genes(population[i], layout, tmpl)), data);
    } catch (const Error&) {
      scores[i] = std::numeric_limits<double>::infinity();
    }
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < population.size(); ++i) work(i);
    return scores;
  }
  // Each slot is written by exactly one worker, so results do not depend on scheduling.
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < population.size(); i += threads) work(i);
    });
  }
  pool.clear();
  return scores;
}

}  // namespace

GaResult run_ga(const GaSettings& settings, const FisConfig& tmpl, const std::vector<GameplayRecord>& dataset,
                const GenerationObserver& observer) {
  settings.validate();
  const PreparedDataset data(dataset, tmpl);
  const auto layout = ChromosomeLayout::from_config(tmpl);
  const auto& bounds = layout.bounds();
  const std::size_t n_genes = layout.size();
  const std::size_t pop_size = settings.population_size;
  const unsigned threads = settings.threads ? settings.threads : std::max(1u, std::thread::hardware_concurrency());

  Rng rng(settings.seed);

  // Draw order per generation: uniform initial genes (generation 0 only),
  // then selection phase, parent shuffle, crossover masks, mutation directions.
  std::vector<std::vector<double>> population;
  population.reserve(pop_size);
  population.push_back(encode(tmpl).genes());
  while (population.size() < pop_size) {
    std::vector<double> genes(n_genes);
    for (std::size_t i = 0; i < n_genes; ++i) genes[i] = rng.uniform(bounds[i].lo, bounds[i].hi);
    population.push_back(std::move(genes));
  }

  const auto scaled = ga_ops::rank_scale(pop_size);
  const std::size_t n_kids = pop_size - settings.elite_count;
  const auto n_xover =
      static_cast<std::size_t>(std::lround(settings.crossover_fraction * static_cast<double>(n_kids)));
  const std::size_t n_mut = n_kids - n_xover;

  GaResult result{tmpl, encode(tmpl), 0.0, {}, false};
  double step = settings.initial_step;
  std::vector<std::size_t> order(pop_size);

  for (std::size_t gen = 0;; ++gen) {
    const auto scores = evaluate_population(population, layout, tmpl, data, threads);
    if (observer) observer(gen, population, scores);

    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    const double best = scores[order.front()];
    double mean = 0.0;
    for (double s : scores) mean += s;
    mean /= static_cast<double>(pop_size);

    if (gen > 0) {
      step *= best < result.history.back().best ? settings.step_growth : settings.step_shrink;
      step = std::clamp(step, 1e-8, 1.0);
    }
    result.history.push_back({gen, best, mean, step});

    const std::size_t done = result.history.size();
    bool stop = done >= settings.max_generations;
    if (!stop && settings.stall_generations > 0 && done > settings.stall_generations) {
      const double earlier = result.history[done - 1 - settings.stall_generations].best;
      if (earlier - best < settings.stall_tolerance) {
        result.stalled = true;
        stop = true;
      }
    }
    if (stop) {
      result.best = Chromosome(population[order.front()], bounds);
      result.best_fitness = best;
      result.best_config = decode(result.best, tmpl);
      return result;
    }

    const auto picks = ga_ops::stochastic_uniform_select(scaled, 2 * n_xover + n_mut, rng.uniform());
    std::vector<std::size_t> parents;
    parents.reserve(picks.size());
    for (auto p : picks) parents.push_back(order[p]);
    for (std::size_t i = parents.size(); i > 1; --i) std::swap(parents[i - 1], parents[rng.below(i)]);

    std::vector<std::vector<double>> next;
    next.reserve(pop_size);
    for (std::size_t e = 0; e < settings.elite_count; ++e) next.push_back(population[order[e]]);
    std::size_t cursor = 0;
    std::vector<std::uint8_t> mask(n_genes);
    for (std::size_t k = 0; k < n_xover; ++k) {
      const auto& a = population[parents[cursor++]];
      const auto& b = population[parents[cursor++]];
      for (auto& m : mask) m = static_cast<std::uint8_t>(rng.next() >> 63);
      next.push_back(ga_ops::scattered_crossover(a, b, mask));
    }
    for (std::size_t k = 0; k < n_mut; ++k) {
      next.push_back(ga_ops::adaptive_feasible_mutate(population[parents[cursor++]], bounds, step, rng));
    }
    population = std::move(next);
  }
}

}  // namespace cast

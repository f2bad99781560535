#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cast/error.hpp"
#include "cast/ga.hpp"
#include "cast/iwd_model.hpp"
#include "cast/records.hpp"
#include "cast/rng.hpp"
#include "cast/simulate.hpp"
#include "cast/word_tasks.hpp"
#include "oracle.hpp"

using namespace cast;

namespace {

std::vector<GameplayRecord> sim(int participants, std::uint64_t seed) {
  return rated_only(simulate_participants(participants, seed, AbilityModel{}, default_tasks()));
}

// IWD output labels all centered at `c`, so any firing pattern defuzzifies to c.
FisConfig constant_iwd(double c) {
  auto cfg = default_fis_config();
  for (auto& t : cfg.variable("iwd").mutable_terms()) t.mf = MembershipFunction::gaussian(0.3, c);
  return cfg;
}

bool within(const std::vector<double>& genes, const std::vector<GeneBounds>& b) {
  for (std::size_t i = 0; i < genes.size(); ++i) {
    if (genes[i] < b[i].lo || genes[i] > b[i].hi) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("layout covers every tunable parameter except the skip flag") {
  const auto c = default_fis_config();
  const auto layout = ChromosomeLayout::from_config(c);
  CHECK(layout.size() == 42);  // 7 variables x 3 labels x 2 parameters
  for (const auto& r : layout.refs()) CHECK(c.variables[r.variable].name() != "was_skipped");
  CHECK(layout.describe(c, 0) == "num_guesses.Low[0]");
  for (std::size_t g = 0; g < layout.size(); ++g) {
    const auto& r = layout.refs()[g];
    const double v = c.variables[r.variable].terms()[r.term].mf.params()[r.param];
    CHECK(layout.bounds()[g].lo <= v);
    CHECK(layout.bounds()[g].hi >= v);
    CHECK(layout.bounds()[g].lo < layout.bounds()[g].hi);
  }
}

TEST_CASE("encode and decode round trip") {
  const auto c = default_fis_config();
  CHECK(decode(encode(c), c) == c);
  const auto recorded = with_recorded_bounds(c);
  CHECK(decode(encode(recorded), recorded) == recorded);
  CHECK(encode(recorded).bounds() == encode(c).bounds());
}

TEST_CASE("perturbing one gene changes exactly one parameter") {
  const auto c = default_fis_config();
  const auto ch = encode(c);
  for (std::size_t g : {std::size_t{0}, std::size_t{17}, ch.size() - 1}) {
    auto genes = ch.genes();
    const auto& b = ch.bounds()[g];
    genes[g] = 0.5 * (genes[g] + (genes[g] < b.hi ? b.hi : b.lo));
    const auto d = decode(Chromosome(genes, ch.bounds()), c);
    int changed = 0;
    for (std::size_t v = 0; v < c.variables.size(); ++v) {
      for (std::size_t t = 0; t < c.variables[v].terms().size(); ++t) {
        const auto& p0 = c.variables[v].terms()[t].mf.params();
        const auto& p1 = d.variables[v].terms()[t].mf.params();
        for (std::size_t k = 0; k < p0.size(); ++k) changed += p0[k] != p1[k];
      }
    }
    CHECK(changed == 1);
    CHECK(d.nodes == c.nodes);
    CHECK(d.variable("was_skipped") == c.variable("was_skipped"));
  }
}

TEST_CASE("chromosome rejects out-of-bounds genes and size mismatches") {
  const auto ch = encode(default_fis_config());
  auto genes = ch.genes();
  genes[3] = ch.bounds()[3].hi + 1e-9;
  CHECK_THROWS_AS(Chromosome(genes, ch.bounds()), LayoutError);
  genes.pop_back();
  CHECK_THROWS_AS(Chromosome(genes, ch.bounds()), LayoutError);
  CHECK_THROWS_AS(decode(Chromosome(std::vector<double>(41, 0.0), std::vector<GeneBounds>(41, {-1, 1})),
                         default_fis_config()),
                  LayoutError);
}

TEST_CASE("fitness examples") {
  auto five = sim(2, 4);
  for (auto& r : five) r.urd = 5;
  const auto c5 = constant_iwd(5.0);
  CHECK(fitness(encode(c5), c5, five) < 1e-18);

  auto one = std::vector<GameplayRecord>{five.front()};
  const auto c3 = constant_iwd(3.0);
  CHECK(fitness(encode(c3), c3, one) == doctest::Approx(4.0).epsilon(1e-12));

  CHECK_THROWS_AS(fitness(encode(c3), c3, {}), InputError);
  auto unrated = one;
  unrated[0].urd.reset();
  CHECK_THROWS_AS(fitness(encode(c3), c3, unrated), InputError);
}

TEST_CASE("fitness equals a brute-force rescoring loop") {
  auto data = sim(4, 12);
  data.resize(100);
  const auto c = default_fis_config();
  double want = 0;
  for (const auto& r : data) {
    const double e = oracle::full_iwd(r.word, r.scramble, r.time_taken, r.num_guesses, r.was_skipped) - *r.urd;
    want += e * e;
  }
  CHECK(fitness(encode(c), c, data) == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("fitness ignores record order") {
  auto data = sim(6, 2);
  const auto c = default_fis_config();
  const double base = fitness(encode(c), c, data);
  std::mt19937_64 gen(1);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(data.begin(), data.end(), gen);
    CHECK(fitness(encode(c), c, data) == base);
  }
}

TEST_CASE("rank scaling") {
  const auto s = ga_ops::rank_scale(9);
  double sum = 0;
  for (double v : s) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s[0] / s[3] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s[0] / s[8] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(std::is_sorted(s.rbegin(), s.rend()));
}

TEST_CASE("stochastic uniform selection") {
  const std::vector<double> s{0.7, 0.2, 0.1};
  const auto sel = ga_ops::stochastic_uniform_select(s, 10, 0.05);
  CHECK(sel == std::vector<std::size_t>{0, 0, 0, 0, 0, 0, 0, 1, 1, 2});
  const std::vector<double> even{0.25, 0.25, 0.25, 0.25};
  CHECK(ga_ops::stochastic_uniform_select(even, 4, 0.5) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(ga_ops::stochastic_uniform_select(even, 8, 0.0).size() == 8);
}

TEST_CASE("scattered crossover") {
  const std::vector<double> a{1, 2, 3, 4}, b{-1, -2, -3, -4};
  const std::vector<std::uint8_t> ones{1, 1, 1, 1}, zeros{0, 0, 0, 0}, mix{1, 0, 0, 1};
  CHECK(ga_ops::scattered_crossover(a, b, ones) == a);
  CHECK(ga_ops::scattered_crossover(a, b, zeros) == b);
  CHECK(ga_ops::scattered_crossover(a, b, mix) == std::vector<double>{1, -2, -3, 4});
}

TEST_CASE("adaptive feasible mutation stays inside the box") {
  const std::vector<GeneBounds> box{{0, 1}, {-5, 5}, {10, 10.5}, {0, 100}};
  const std::vector<double> edge{0, 5, 10.5, 50};
  Rng rng(8);
  for (double step : {0.001, 0.01, 0.3, 5.0}) {
    for (int i = 0; i < 5000; ++i) {
      const auto child = ga_ops::adaptive_feasible_mutate(edge, box, step, rng);
      REQUIRE(child.size() == edge.size());
      CHECK(within(child, box));
      for (std::size_t g = 0; g < box.size(); ++g) {
        CHECK(std::abs(child[g] - edge[g]) <= step * (box[g].hi - box[g].lo) * 2.0 + 1e-12);  // |direction| = sqrt(4)
      }
    }
  }
  Rng r1(3), r2(3);
  CHECK(ga_ops::adaptive_feasible_mutate(edge, box, 0.1, r1) == ga_ops::adaptive_feasible_mutate(edge, box, 0.1, r2));
}

TEST_CASE("settings validation") {
  GaSettings s;
  s.population_size = 1;
  CHECK_THROWS_AS(s.validate(), InputError);
  s.population_size = 4;
  s.elite_count = 4;
  CHECK_THROWS_AS(s.validate(), InputError);
}

TEST_CASE("small run keeps its invariants") {
  const auto data = sim(8, 21);
  const auto c = default_fis_config();
  GaSettings s;
  s.population_size = 24;
  s.max_generations = 10;
  s.seed = 5;
  s.threads = 1;
  const auto bounds = ChromosomeLayout::from_config(c).bounds();
  std::vector<std::size_t> sizes;
  bool ok = true;
  const auto res = run_ga(s, c, data, [&](std::size_t, std::span<const std::vector<double>> pop, std::span<const double>) {
    sizes.push_back(pop.size());
    for (const auto& g : pop) ok = ok && within(g, bounds);
  });
  CHECK(ok);
  CHECK(res.history.size() == 10);
  CHECK(sizes == std::vector<std::size_t>(10, 24));
  for (std::size_t g = 1; g < res.history.size(); ++g) CHECK(res.history[g].best <= res.history[g - 1].best);
  CHECK(res.best_fitness <= fitness(encode(c), c, data));
  CHECK(res.best_fitness == res.history.back().best);
  CHECK(fitness(res.best, c, data) == res.best_fitness);
  CHECK(IwdModel(res.best_config).config() == res.best_config);

  s.threads = 3;
  const auto again = run_ga(s, c, data);
  CHECK(again.best == res.best);
  CHECK(again.best_fitness == res.best_fitness);
  s.seed = 6;
  CHECK_FALSE(run_ga(s, c, data).best == res.best);
}

TEST_CASE("a perfect template stays at zero and stalls early") {
  auto data = sim(2, 4);
  for (auto& r : data) r.urd = 5;
  const auto c = constant_iwd(5.0);
  GaSettings s;
  s.population_size = 10;
  s.max_generations = 50;
  s.stall_generations = 2;
  s.seed = 1;
  const auto res = run_ga(s, c, data);
  CHECK(res.history.front().best < 1e-18);
  CHECK(res.best_fitness <= res.history.front().best);
  CHECK(res.stalled);
  CHECK(res.history.size() == 3);
}

TEST_CASE("empty dataset is an input error") {
  GaSettings s;
  s.population_size = 4;
  CHECK_THROWS_AS(run_ga(s, default_fis_config(), {}), InputError);
}

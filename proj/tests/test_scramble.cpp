#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "cast/error.hpp"
#include "cast/scramble.hpp"
#include "cast/word_tasks.hpp"
#include "oracle.hpp"

using namespace cast;

TEST_CASE("indicator is 1 when letters differ") {
  CHECK(indicator('w', 't') == 1);
  CHECK(indicator('a', 'a') == 0);
  CHECK(indicator('r', 'w') == 1);
  CHECK(indicator('A', 'a') == 0);
}

TEST_CASE("water / tarew") {
  CHECK(degree_of_scramble("water", "tarew") == 0.65625);
  CHECK(normalized_hamming("water", "tarew") == 0.6);
  const ScramblePair p("Water", "TAREW");
  CHECK(p.word() == "water");
  CHECK(degree_of_scramble(p) == 0.65625);
}

TEST_CASE("degree of scramble examples") {
  CHECK(degree_of_scramble("abcde", "bcdea") == 0.96875);
  for (std::size_t n = 2; n <= 12; ++n) {
    std::string w, p;
    for (std::size_t i = 0; i < n; ++i) w += static_cast<char>('a' + i);
    p = w.substr(1) + w[0];  // rotation: every position differs
    CHECK(degree_of_scramble(w, p) == 1.0 - std::ldexp(1.0, -static_cast<int>(n)));
    CHECK(normalized_hamming(w, p) == 1.0);
  }
  CHECK(degree_of_scramble("abcdef", "abdcef") == 0.125 + 0.0625);
  CHECK(degree_of_scramble("abcd", "abzd") == 0.125);  // raw overload only needs equal length
  CHECK(normalized_hamming("abcdefgh", "abcdefhg") == 0.25);
  CHECK_THROWS_AS(degree_of_scramble("abc", "ab"), InputError);
  CHECK_THROWS_AS(normalized_hamming("abc", "ab"), InputError);
}

TEST_CASE("flipping position i adds exactly 2^-i") {
  const std::string w = "abcdefghij";
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::string p = w;
    p[i] = 'z';
    CHECK(degree_of_scramble(w, p) - degree_of_scramble(w, w) == std::ldexp(1.0, -static_cast<int>(i + 1)));
  }
}

TEST_CASE("pair invariants") {
  CHECK_THROWS_AS(ScramblePair("water", "water"), InputError);
  CHECK_THROWS_AS(ScramblePair("water", "tare"), InputError);
  CHECK_THROWS_AS(ScramblePair("water", "tarex"), InputError);
  CHECK_THROWS_AS(ScramblePair("a", "a"), InputError);
  CHECK_THROWS_AS(ScramblePair("wat3r", "3tawr"), InputError);
}

TEST_CASE("pearson examples") {
  std::vector<double> xs{1, 2, 3, 4, 5.5};
  std::vector<double> lin, neg;
  for (double x : xs) {
    lin.push_back(2 * x + 1);
    neg.push_back(-x);
  }
  CHECK(pearson(xs, lin) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pearson(xs, neg) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(pearson(xs, xs) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{1, 3, 2}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(pearson(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}), UndefinedCorrelationError);
  CHECK_THROWS_AS(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{4, 4, 4}), UndefinedCorrelationError);
  CHECK_THROWS(pearson(std::vector<double>{1, 2}, std::vector<double>{1, 2}));
  CHECK_THROWS(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2}));
}

TEST_CASE("generator honours suffix, determinism and distinctness") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = generate_scramble("hazardous", seed, {.keep_suffix = "ous"});
    CHECK(p.permutation().substr(6) == "ous");
    CHECK(p.permutation() != p.word());
    CHECK(generate_scramble("hazardous", seed, {.keep_suffix = "ous"}).permutation() == p.permutation());
    const auto q = generate_scramble("banana", seed);
    CHECK(q.permutation() != "banana");
    auto a = q.permutation(), b = std::string("banana");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  CHECK_THROWS_AS(generate_scramble("aaaa", 1), NoValidScrambleError);
  CHECK_THROWS_AS(generate_scramble("xxous", 1, {.keep_suffix = "ous"}), NoValidScrambleError);
  CHECK_THROWS(generate_scramble("water", 1, {.keep_suffix = "xyz"}));
}

TEST_CASE("metrics stay in range over random valid pairs") {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 2000; ++i) {
    std::string w;
    const int n = 2 + static_cast<int>(gen() % 12);
    for (int k = 0; k < n; ++k) w += static_cast<char>('a' + gen() % 26);
    std::string p;
    try {
      p = generate_scramble(w, gen()).permutation();
    } catch (const NoValidScrambleError&) {
      continue;
    }
    const double s = degree_of_scramble(w, p), h = normalized_hamming(w, p);
    CHECK(s > 0.0);
    CHECK(s < 1.0);
    CHECK(h > 0.0);
    CHECK(h <= 1.0);
  }
}

TEST_CASE("default task scrambles") {
  const auto tasks = default_tasks();
  REQUIRE(tasks.size() == 28);
  std::vector<double> s, h;
  for (const auto& t : tasks) {
    ScramblePair p(t.word, t.scramble);  // throws if invalid
    s.push_back(degree_of_scramble(p));
    h.push_back(normalized_hamming(p));
    CHECK(s.back() == oracle::scramble_degree(t.word, t.scramble));
  }
  CHECK(pearson(s, h) > 0.0);
  CHECK(pearson(s, h) == doctest::Approx(0.68437700890297304).epsilon(1e-12));
}

#include <doctest.h>

#include <random>

#include "cast/error.hpp"
#include "cast/fis_config.hpp"
#include "cast/iwd_model.hpp"
#include "cast/scramble.hpp"
#include "oracle.hpp"

using namespace cast;

namespace {

GameplayRecord water(double time, int guesses, bool skipped) {
  GameplayRecord r;
  r.participant_id = "p";
  r.word = "water";
  r.scramble = "tarew";
  r.time_taken = time;
  r.num_guesses = guesses;
  r.was_skipped = skipped;
  return r;
}

// Values produced by the rule-by-rule reference in oracle.hpp.
constexpr double kUe_2_15 = 0.39086031294431106;
constexpr double kUe_10_60 = 0.84765104015179016;
constexpr double kUe_0_0 = 0.15234895984820829;
constexpr double kCow_5_01 = 0.5000000000000081;
constexpr double kCow_10_09 = 0.5000000000000081;
constexpr double kIwdWaterSolved = 3.6719388143481821;
constexpr double kIwdWaterSkipped = 8.0339237996436133;
constexpr double kIwd_01_01_0 = 3.2116524921085401;

}  // namespace

TEST_CASE("feature extraction") {
  const auto c = default_fis_config();
  const auto f = extract_features(water(15, 2, false), c);
  CHECK(f == FeatureVector{15, 2, 5, 0.65625, 0});
  CHECK(extract_features(water(300, 2, false), c).time_taken == 60);
  CHECK(extract_features(water(3, 40, false), c).num_guesses == 10);
  const auto s = extract_features(water(20, 0, true), c);
  CHECK(s.was_skipped == 1.0);
  CHECK(s.num_guesses == 0.0);
  auto longword = water(5, 1, false);
  longword.word = "abcdefghijklmnopqrst";
  longword.scramble = "tsrqponmlkjihgfedcba";
  CHECK(extract_features(longword, c).word_length == 15);
}

TEST_CASE("record invariants") {
  CHECK_THROWS_AS(validate_record(water(-1, 1, false)), InputError);
  CHECK_THROWS_AS(validate_record(water(5, 0, false)), InputError);
  CHECK_NOTHROW(validate_record(water(5, 0, true)));
  auto r = water(5, 1, false);
  r.urd = 11;
  CHECK_THROWS_AS(validate_record(r), InputError);
  r.urd.reset();
  CHECK_NOTHROW(validate_record(r));
}

TEST_CASE("user effort anchor and regions") {
  const IwdModel m(default_fis_config());
  const double ue = m.compute_ue(2, 15);
  // Within 0.05 of the published 0.348; see README for the rule reading.
  CHECK(std::abs(ue - 0.348) <= 0.05);
  CHECK(ue == doctest::Approx(kUe_2_15).epsilon(1e-9));
  CHECK(m.compute_ue(10, 60) == doctest::Approx(kUe_10_60).epsilon(1e-9));
  CHECK(m.compute_ue(10, 60) > 0.5);
  CHECK(m.compute_ue(0, 0) == doctest::Approx(kUe_0_0).epsilon(1e-9));
  CHECK(m.compute_ue(0, 0) < 0.5);
}

TEST_CASE("complexity of word with the heuristic widths") {
  const IwdModel m(default_fis_config());
  // The heuristic CoW output sets are so wide (sigma 2.123 on [0,1]) that
  // they are nearly flat, so the centroid sits at 0.5 for any firing pattern.
  CHECK(m.compute_cow(5, 0.1) == doctest::Approx(kCow_5_01).epsilon(1e-9));
  CHECK(m.compute_cow(10, 0.9) == doctest::Approx(kCow_10_09).epsilon(1e-9));
  for (double l = 1; l <= 15; l += 0.5) {
    for (double s = 0; s <= 1.0; s += 0.05) {
      const double c = m.compute_cow(l, s);
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
    }
  }
}

TEST_CASE("iwd regions") {
  const IwdModel m(default_fis_config());
  CHECK(m.compute_iwd(0.1, 0.1, 0) == doctest::Approx(kIwd_01_01_0).epsilon(1e-9));
  CHECK(m.compute_iwd(0.1, 0.1, 0) < 4.5);
  for (double ue : {0.0, 0.2, 0.5, 0.8, 1.0}) CHECK(m.compute_iwd(ue, 0.9, 1) > 5.5);
  const auto solved = m.score(water(15, 2, false));
  CHECK(solved.iwd == doctest::Approx(kIwdWaterSolved).epsilon(1e-9));
  CHECK(solved.category == DifficultyCategory::Easy);
  const auto skipped = m.score(water(15, 0, true));
  CHECK(skipped.iwd == doctest::Approx(kIwdWaterSkipped).epsilon(1e-9));
  CHECK(skipped.category == DifficultyCategory::Hard);
}

TEST_CASE("skip flag inputs hit the triangular peaks") {
  const auto c = default_fis_config();
  const auto& s = c.variable("was_skipped");
  CHECK(s.terms()[s.term_index("True")].mf.evaluate(1.0) == 1.0);
  CHECK(s.terms()[s.term_index("False")].mf.evaluate(0.0) == 1.0);
  CHECK(s.terms()[s.term_index("True")].mf.evaluate(0.0) == 0.0);
  CHECK(s.terms()[s.term_index("False")].mf.evaluate(1.0) == 0.0);
}

TEST_CASE("model agrees with the reference pipeline") {
  const IwdModel m(default_fis_config());
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 300; ++i) {
    const double g = u(gen) * 12, t = u(gen) * 80, l = 1 + u(gen) * 15, d = u(gen);
    CHECK(m.compute_ue(g, t) == doctest::Approx(oracle::ue_of(g, t)).epsilon(1e-10));
    CHECK(m.compute_cow(l, d) == doctest::Approx(oracle::cow_of(l, d)).epsilon(1e-10));
    const double a = u(gen), b = u(gen), sk = (i % 2) ? 1.0 : 0.0;
    CHECK(m.compute_iwd(a, b, sk) == doctest::Approx(oracle::iwd_of(a, b, sk)).epsilon(1e-10));
  }
}

TEST_CASE("classification thresholds") {
  CHECK(classify_iwd(1.6) == DifficultyCategory::Easy);
  CHECK(classify_iwd(5.0) == DifficultyCategory::Medium);
  CHECK(classify_iwd(8.9) == DifficultyCategory::Hard);
  CHECK(classify_iwd(4.4999999) == DifficultyCategory::Easy);
  CHECK(classify_iwd(4.5) == DifficultyCategory::Medium);
  CHECK(classify_iwd(5.5) == DifficultyCategory::Medium);
  CHECK(classify_iwd(5.5000001) == DifficultyCategory::Hard);
  CHECK(category_from_string(to_string(DifficultyCategory::Medium)) == DifficultyCategory::Medium);
}

TEST_CASE("skipping never lowers iwd") {
  const IwdModel m(default_fis_config());
  for (double ue = 0; ue <= 1.0001; ue += 0.02) {
    for (double cow = 0; cow <= 1.0001; cow += 0.05) {
      CHECK(m.compute_iwd(ue, cow, 1) >= m.compute_iwd(ue, cow, 0));
    }
  }
}

TEST_CASE("scoring is deterministic and never rejects a clamped record") {
  const IwdModel m(default_fis_config());
  auto r = water(1e9, 1000, false);
  const auto a = m.score(r), b = m.score(r);
  CHECK(a.iwd == b.iwd);
  CHECK(a.category == b.category);
}

TEST_CASE("shipped default model file matches the built-in config") {
  const auto shipped = load_fis_config(std::string(CAST_DATA_SOURCE_DIR) + "/default_model.json");
  CHECK(shipped == default_fis_config());
  int rules = 0;
  for (const auto& n : shipped.nodes) rules += static_cast<int>(n.rules.size());
  CHECK(rules == 16);
}

TEST_CASE("nodes can declare inputs in any order") {
  auto c = default_fis_config();
  for (auto& n : c.nodes) std::reverse(n.inputs.begin(), n.inputs.end());
  const IwdModel flipped(c), plain(default_fis_config());
  CHECK(flipped.compute_ue(3, 22) == plain.compute_ue(3, 22));
  CHECK(flipped.compute_iwd(0.3, 0.6, 1) == plain.compute_iwd(0.3, 0.6, 1));
}

#include "cast/scramble.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "cast/error.hpp"
#include "cast/rng.hpp"

namespace cast {

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

namespace {

bool all_letters(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; });
}

void require_same_length(std::string_view word, std::string_view permutation) {
  if (word.size() != permutation.size()) throw InputError("word and permutation differ in length");
  if (word.empty()) throw InputError("empty word");
}

}  // namespace

ScramblePair::ScramblePair(std::string_view word, std::string_view permutation)
    : word_(to_lower_ascii(word)), permutation_(to_lower_ascii(permutation)) {
  require_same_length(word_, permutation_);
  if (word_.size() < 2) throw InputError("scramble pairs need at least two letters");
  if (!all_letters(word_) || !all_letters(permutation_)) throw InputError("words must be ASCII letters");
  std::string a = word_, b = permutation_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw InputError("'" + permutation_ + "' is not a rearrangement of '" + word_ + "'");
  if (word_ == permutation_) throw InputError("permutation equals the word");
}

int indicator(char w, char p) {
  return std::tolower(static_cast<unsigned char>(w)) != std::tolower(static_cast<unsigned char>(p)) ? 1 : 0;
}

double degree_of_scramble(std::string_view word, std::string_view permutation) {
  require_same_length(word, permutation);
  double s = 0.0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    s += std::ldexp(static_cast<double>(indicator(word[i], permutation[i])), -static_cast<int>(i + 1));
  }
  return s;
}

double degree_of_scramble(const ScramblePair& pair) { return degree_of_scramble(pair.word(), pair.permutation()); }

double normalized_hamming(std::string_view word, std::string_view permutation) {
  require_same_length(word, permutation);
  int mismatches = 0;
  for (std::size_t i = 0; i < word.size(); ++i) mismatches += indicator(word[i], permutation[i]);
  return static_cast<double>(mismatches) / static_cast<double>(word.size());
}

double normalized_hamming(const ScramblePair& pair) { return normalized_hamming(pair.word(), pair.permutation()); }

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InputError("pearson: sequences differ in length");
  if (xs.size() < 3) throw InputError("pearson: need at least three pairs");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedCorrelationError("pearson: constant input");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

ScramblePair generate_scramble(std::string_view word, std::uint64_t seed, const ScrambleOptions& options) {
  const std::string w = to_lower_ascii(word);
  if (w.size() < 2 || !all_letters(w)) throw InputError("cannot scramble '" + w + "'");

  std::size_t movable = w.size();
  if (options.keep_suffix) {
    const std::string suffix = to_lower_ascii(*options.keep_suffix);
    if (suffix.size() >= w.size() || !w.ends_with(suffix)) {
      throw InputError("'" + suffix + "' is not a proper suffix of '" + w + "'");
    }
    movable = w.size() - suffix.size();
  }
  const std::set<char> distinct(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(movable));
  if (distinct.size() < 2) throw NoValidScrambleError("'" + w + "' has no distinct rearrangement");

  Rng rng(seed);
  std::string p = w;
  do {
    for (std::size_t i = movable - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
  } while (p == w);
  return ScramblePair(w, p);
}

}  // namespace cast

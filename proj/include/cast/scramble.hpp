#pragma once

// Position-sensitive metrics between a word and its scrambled permutation.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace cast {

// A lowercase ASCII word together with a distinct rearrangement of its letters.
class ScramblePair {
public:
  // Lowercases both strings. Throws InputError unless |word| = |perm| >= 2,
  // both are ASCII letters, perm is a rearrangement of word and perm != word.
  ScramblePair(std::string_view word, std::string_view permutation);

  const std::string& word() const { return word_; }
  const std::string& permutation() const { return permutation_; }
  std::size_t size() const { return word_.size(); }

private:
  std::string word_;
  std::string permutation_;
};

std::string to_lower_ascii(std::string_view s);

// 1 when the letters differ, 0 when they match (case-insensitive).
int indicator(char w, char p);

// Sum over 1-based positions i of 2^-i for every mismatching position.
// The raw overload only requires equal lengths (InputError otherwise).
double degree_of_scramble(std::string_view word, std::string_view permutation);
double degree_of_scramble(const ScramblePair& pair);

// Mismatching positions divided by length.
double normalized_hamming(std::string_view word, std::string_view permutation);
double normalized_hamming(const ScramblePair& pair);

// Sample Pearson correlation. Needs |xs| = |ys| >= 3 and neither constant.
double pearson(std::span<const double> xs, std::span<const double> ys);

struct ScrambleOptions {
  // When set, these trailing letters stay in place and only the prefix moves.
  std::optional<std::string> keep_suffix;
};

// Seeded Fisher-Yates shuffle, repeated until the result differs from the word.
// Throws NoValidScrambleError when the movable part has a single distinct letter.
ScramblePair generate_scramble(std::string_view word, std::uint64_t seed, const ScrambleOptions& options = {});

}  // namespace cast

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cast {

enum class WordCategory { General, Edibles, Items, Acts, Animals, Colors };

std::string to_string(WordCategory c);
WordCategory word_category_from_string(std::string_view s);

struct WordTask {
  std::string task_id;
  std::string word;
  std::string scramble;
  WordCategory category = WordCategory::General;
  int position = 0;  // 1-based, identical for every participant

  bool operator==(const WordTask&) const = default;
};

// Seed used to generate the shipped scrambles. Task at position p uses seed + p.
inline constexpr std::uint64_t kDefaultScrambleSeed = 20190214;

// The 28-task default sequence: 27 distinct words plus a second, fully
// permuted "hazardous". "water" keeps its published scramble "tarew" and the
// first "hazardous" keeps its "ous" suffix in place.
std::vector<WordTask> default_tasks();

std::vector<WordTask> read_tasks_csv(std::istream& in);
std::vector<WordTask> read_tasks_csv(const std::filesystem::path& path);
void write_tasks_csv(std::ostream& out, const std::vector<WordTask>& tasks);

}  // namespace cast

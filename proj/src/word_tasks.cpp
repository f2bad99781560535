#include "cast/word_tasks.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cast/error.hpp"
#include "cast/scramble.hpp"

namespace cast {

std::string to_string(WordCategory c) {
  switch (c) {
    case WordCategory::General:
      return "General";
    case WordCategory::Edibles:
      return "Edibles";
    case WordCategory::Items:
      return "Items";
    case WordCategory::Acts:
      return "Acts";
    case WordCategory::Animals:
      return "Animals";
    case WordCategory::Colors:
      return "Colors";
  }
  return "?";
}

WordCategory word_category_from_string(std::string_view s) {
  for (auto c : {WordCategory::General, WordCategory::Edibles, WordCategory::Items, WordCategory::Acts,
                 WordCategory::Animals, WordCategory::Colors}) {
    if (to_string(c) == s) return c;
  }
  throw InputError("unknown word category '" + std::string(s) + "'");
}

namespace {

struct Entry {
  const char* word;
  WordCategory category;
  const char* tag;
  const char* fixed_scramble;  // nullptr: generate
  const char* keep_suffix;     // nullptr: permute everything
};

using C = WordCategory;

// clang-format off
constexpr Entry kSequence[] = {
    {"knock",     C::Acts,    "",    nullptr, nullptr},
    {"hazardous", C::General, "-v1", nullptr, "ous"},
    {"water",     C::Edibles, "",    "tarew", nullptr},
    {"prize",     C::Items,   "",    nullptr, nullptr},
    {"khaki",     C::Colors,  "",    nullptr, nullptr},
    {"liberty",   C::General, "",    nullptr, nullptr},
    {"mustard",   C::Edibles, "",    nullptr, nullptr},
    {"nickel",    C::Items,   "",    nullptr, nullptr},
    {"check",     C::Acts,    "",    nullptr, nullptr},
    {"ebony",     C::Colors,  "",    nullptr, nullptr},
    {"manatee",   C::Animals, "",    nullptr, nullptr},
    {"quakes",    C::General, "",    nullptr, nullptr},
    {"avocado",   C::Edibles, "",    nullptr, nullptr},
    {"pickup",    C::Items,   "",    nullptr, nullptr},
    {"defuse",    C::Acts,    "",    nullptr, nullptr},
    {"orange",    C::Colors,  "",    nullptr, nullptr},
    {"bright",    C::General, "",    nullptr, nullptr},
    {"raspberry", C::Edibles, "",    nullptr, nullptr},
    {"gargoyle",  C::Items,   "",    nullptr, nullptr},
    {"harvest",   C::Acts,    "",    nullptr, nullptr},
    {"lavender",  C::Colors,  "",    nullptr, nullptr},
    {"twilight",  C::General, "",    nullptr, nullptr},
    {"pistachio", C::Edibles, "",    nullptr, nullptr},
    {"hazardous", C::General, "-v2", nullptr, nullptr},
    {"daffodil",  C::Items,   "",    nullptr, nullptr},
    {"midnight",  C::General, "",    nullptr, nullptr},
    {"jasmine",   C::Items,   "",    nullptr, nullptr},
    {"brilliant", C::General, "",    nullptr, nullptr},
};
// clang-format on

std::string two_digits(int n) { return (n < 10 ? "0" : "") + std::to_string(n); }

}  // namespace

std::vector<WordTask> default_tasks() {
  std::vector<WordTask> tasks;
  int position = 0;
  for (const auto& e : kSequence) {
    ++position;
    std::string scramble;
    if (e.fixed_scramble) {
      scramble = ScramblePair(e.word, e.fixed_scramble).permutation();
    } else {
      ScrambleOptions opts;
      if (e.keep_suffix) opts.keep_suffix = e.keep_suffix;
      scramble = generate_scramble(e.word, kDefaultScrambleSeed + static_cast<std::uint64_t>(position), opts)
                     .permutation();
    }
    tasks.push_back({"t" + two_digits(position) + "-" + e.word + e.tag, e.word, std::move(scramble), e.category,
                     position});
  }
  return tasks;
}

std::vector<WordTask> read_tasks_csv(std::istream& in) {
  std::vector<WordTask> tasks;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      header = false;
      if (line != "position,task_id,word,scramble,category") throw InputError("unexpected task file header");
      continue;
    }
    std::stringstream ss(line);
    std::string pos, id, word, scramble, cat;
    if (!std::getline(ss, pos, ',') || !std::getline(ss, id, ',') || !std::getline(ss, word, ',') ||
        !std::getline(ss, scramble, ',') || !std::getline(ss, cat, ',')) {
      throw InputError("malformed task line: " + line);
    }
    ScramblePair pair(word, scramble);
    tasks.push_back({id, pair.word(), pair.permutation(), word_category_from_string(cat), std::stoi(pos)});
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (tasks[i].position != static_cast<int>(i + 1)) throw InputError("task positions must be 1..n in order");
  }
  return tasks;
}

std::vector<WordTask> read_tasks_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_tasks_csv(in);
}

void write_tasks_csv(std::ostream& out, const std::vector<WordTask>& tasks) {
  out << "position,task_id,word,scramble,category\n";
  for (const auto& t : tasks) {
    out << t.position << ',' << t.task_id << ',' << t.word << ',' << t.scramble << ',' << to_string(t.category)
        << '\n';
  }
}

}  // namespace cast

#include "cast/records.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cast/error.hpp"

namespace cast {

using nlohmann::json;

json to_json(const GameplayRecord& rec) {
  json j{{"participant_id", rec.participant_id},
         {"session_id", rec.session_id},
         {"word", rec.word},
         {"scramble", rec.scramble},
         {"time_taken", rec.time_taken},
         {"num_guesses", rec.num_guesses},
         {"was_skipped", rec.was_skipped},
         {"presentation_index", rec.presentation_index}};
  j["urd"] = rec.urd ? json(*rec.urd) : json(nullptr);
  if (rec.iwd_crisp) j["iwd_crisp"] = *rec.iwd_crisp;
  if (rec.iwd_category) j["iwd_category"] = to_string(*rec.iwd_category);
  return j;
}

GameplayRecord record_from_json(const json& j) {
  try {
    GameplayRecord rec;
    rec.participant_id = j.at("participant_id").get<std::string>();
    rec.session_id = j.value("session_id", std::string{});
    rec.word = j.at("word").get<std::string>();
    rec.scramble = j.at("scramble").get<std::string>();
    rec.time_taken = j.at("time_taken").get<double>();
    rec.num_guesses = j.at("num_guesses").get<int>();
    rec.was_skipped = j.at("was_skipped").get<bool>();
    rec.presentation_index = j.value("presentation_index", 0);
    if (j.contains("urd") && !j.at("urd").is_null()) rec.urd = j.at("urd").get<int>();
    if (j.contains("iwd_crisp")) rec.iwd_crisp = j.at("iwd_crisp").get<double>();
    if (j.contains("iwd_category")) rec.iwd_category = category_from_string(j.at("iwd_category").get<std::string>());
    validate_record(rec);
    return rec;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed gameplay record: ") + e.what());
  }
}

std::vector<GameplayRecord> read_records_jsonl(std::istream& in) {
  std::vector<GameplayRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<GameplayRecord> read_records_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_records_jsonl(in);
}

void write_records_jsonl(std::ostream& out, const std::vector<GameplayRecord>& records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

void write_records_jsonl(const std::filesystem::path& path, const std::vector<GameplayRecord>& records) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_records_jsonl(out, records);
}

void write_records_csv(std::ostream& out, const std::vector<GameplayRecord>& records) {
  out << "participant_id,session_id,presentation_index,word,scramble,time_taken,num_guesses,was_skipped,urd,"
         "iwd_crisp,iwd_category\n";
  for (const auto& r : records) {
    std::ostringstream time;
    time << std::setprecision(17) << r.time_taken;
    out << r.participant_id << ',' << r.session_id << ',' << r.presentation_index << ',' << r.word << ','
        << r.scramble << ',' << time.str() << ',' << r.num_guesses << ',' << (r.was_skipped ? 1 : 0) << ',';
    if (r.urd) out << *r.urd;
    out << ',';
    if (r.iwd_crisp) out << std::setprecision(17) << *r.iwd_crisp;
    out << ',';
    if (r.iwd_category) out << to_string(*r.iwd_category);
    out << '\n';
  }
}

std::vector<GameplayRecord> rated_only(const std::vector<GameplayRecord>& records) {
  std::vector<GameplayRecord> out;
  for (const auto& r : records) {
    if (r.urd) out.push_back(r);
  }
  return out;
}

}  // namespace cast

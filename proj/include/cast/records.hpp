#pragma once

// Serialization of gameplay records: one JSON object per line (JSONL) for
// the persistent log and synthetic datasets, CSV for analysis.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cast/iwd_model.hpp"

namespace cast {

nlohmann::json to_json(const GameplayRecord& rec);
GameplayRecord record_from_json(const nlohmann::json& j);

std::vector<GameplayRecord> read_records_jsonl(std::istream& in);
std::vector<GameplayRecord> read_records_jsonl(const std::filesystem::path& path);
void write_records_jsonl(std::ostream& out, const std::vector<GameplayRecord>& records);
void write_records_jsonl(const std::filesystem::path& path, const std::vector<GameplayRecord>& records);

void write_records_csv(std::ostream& out, const std::vector<GameplayRecord>& records);

// Records that carry a URD; the others are excluded from training and evaluation.
std::vector<GameplayRecord> rated_only(const std::vector<GameplayRecord>& records);

}  // namespace cast

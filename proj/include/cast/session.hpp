#pragma once

// Live game sessions: fixed word sequencing, guess/skip handling, rating
// capture and live IWD scoring, with an append-only JSONL record log.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cast/iwd_model.hpp"
#include "cast/word_tasks.hpp"

namespace cast {

enum class SessionState { AwaitingGuess, AwaitingRating, Complete };
enum class PlayMode { Full, Daily };

inline constexpr std::size_t kDailyTaskCount = 4;

std::string to_string(SessionState s);
std::string to_string(PlayMode m);
PlayMode play_mode_from_string(const std::string& s);

// Serializes appends from any number of sessions; each record is flushed as
// one complete line.
class RecordLog {
public:
  explicit RecordLog(std::filesystem::path path);

  void append(const GameplayRecord& rec);
  const std::filesystem::path& path() const { return path_; }

private:
  std::filesystem::path path_;
  std::mutex mutex_;
  std::ofstream out_;
};

// Sorted random sample of kDailyTaskCount tasks, kept in sequence order.
std::vector<WordTask> daily_sample(const std::vector<WordTask>& tasks, std::uint64_t seed);

struct GuessOutcome {
  bool correct = false;
  int guesses_so_far = 0;
};

// One participant's pass through a task list. Not synchronized; the
// manager serializes access. Times are seconds on the caller's clock.
class Session {
public:
  Session(std::string id, std::string participant_id, PlayMode mode, std::vector<WordTask> tasks, double now);

  const std::string& id() const { return id_; }
  const std::string& participant_id() const { return participant_id_; }
  PlayMode mode() const { return mode_; }
  SessionState state() const { return state_; }
  const std::vector<WordTask>& tasks() const { return tasks_; }
  const std::vector<GameplayRecord>& records() const { return records_; }
  int guesses_so_far() const { return guesses_; }

  // Current task. StateError while awaiting a rating or once complete.
  const WordTask& next_word() const;

  GuessOutcome submit_guess(const std::string& text, double now);
  void submit_skip(double now);

  // Finalizes the pending record with its live IWD and advances. urd may be
  // absent (dismissed prompt). InputError when outside 1..10.
  GameplayRecord submit_rating(std::optional<int> urd, const IwdModel& model, double now);

private:
  void require(SessionState expected, const char* action) const;

  std::string id_;
  std::string participant_id_;
  PlayMode mode_;
  std::vector<WordTask> tasks_;
  std::size_t cursor_ = 0;
  SessionState state_ = SessionState::AwaitingGuess;
  double presented_at_ = 0.0;
  double resolved_at_ = 0.0;
  int guesses_ = 0;
  bool skipped_ = false;
  std::vector<GameplayRecord> records_;
};

struct SessionSummary {
  std::string session_id;
  std::string participant_id;
  PlayMode mode;
  SessionState state;
  std::size_t task_count;
  std::vector<GameplayRecord> records;
};

// Thread-safe registry of sessions. Each session is guarded by its own
// mutex; scoring uses the shared immutable model without locking.
class SessionManager {
public:
  using Clock = std::function<double()>;

  SessionManager(std::vector<WordTask> tasks, std::shared_ptr<const IwdModel> model,
                 std::shared_ptr<RecordLog> log = nullptr, Clock clock = {});

  // seed selects the daily sample; defaults to a hash of participant and session number.
  std::string create(const std::string& participant_id, PlayMode mode, std::optional<std::uint64_t> seed = {});

  WordTask word(const std::string& session_id);
  GuessOutcome guess(const std::string& session_id, const std::string& text);
  void skip(const std::string& session_id);
  GameplayRecord rate(const std::string& session_id, std::optional<int> urd);
  SessionSummary summary(const std::string& session_id);

  const IwdModel& model() const { return *model_; }

private:
  struct Slot {
    explicit Slot(Session s) : session(std::move(s)) {}
    std::mutex mutex;
    Session session;
  };
  std::shared_ptr<Slot> find(const std::string& session_id);

  std::vector<WordTask> tasks_;
  std::shared_ptr<const IwdModel> model_;
  std::shared_ptr<RecordLog> log_;
  Clock clock_;
  std::mutex registry_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::atomic<std::uint64_t> counter_{0};
};

// Re-scores logged records with a model; returns indices whose stored
// category differs from (or is missing compared to) the recomputed one.
std::vector<std::size_t> replay_mismatches(const std::vector<GameplayRecord>& log, const IwdModel& model);

}  // namespace cast

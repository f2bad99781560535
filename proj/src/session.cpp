#include "cast/session.hpp"

#include <algorithm>
#include <chrono>

#include "cast/error.hpp"
#include "cast/records.hpp"
#include "cast/rng.hpp"
#include "cast/scramble.hpp"

namespace cast {

std::string to_string(SessionState s) {
  switch (s) {
    case SessionState::AwaitingGuess:
      return "awaiting_guess";
    case SessionState::AwaitingRating:
      return "awaiting_rating";
    case SessionState::Complete:
      return "complete";
  }
  return "?";
}

std::string to_string(PlayMode m) { return m == PlayMode::Full ? "full" : "daily"; }

PlayMode play_mode_from_string(const std::string& s) {
  if (s == "full") return PlayMode::Full;
  if (s == "daily") return PlayMode::Daily;
  throw InputError("unknown mode '" + s + "' (full, daily)");
}

RecordLog::RecordLog(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  out_.open(path_, std::ios::app);
  if (!out_) throw InputError("cannot open record log " + path_.string());
}

void RecordLog::append(const GameplayRecord& rec) {
  const std::string line = to_json(rec).dump() + "\n";
  std::lock_guard lock(mutex_);
  out_ << line;
  out_.flush();
}

std::vector<WordTask> daily_sample(const std::vector<WordTask>& tasks, std::uint64_t seed) {
  if (tasks.size() <= kDailyTaskCount) return tasks;
  std::vector<std::size_t> idx(tasks.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  Rng rng(seed);
  for (std::size_t i = 0; i < kDailyTaskCount; ++i) {
    std::swap(idx[i], idx[i + rng.below(idx.size() - i)]);
  }
  idx.resize(kDailyTaskCount);
  std::sort(idx.begin(), idx.end());
  std::vector<WordTask> out;
  for (auto i : idx) out.push_back(tasks[i]);
  return out;
}

Session::Session(std::string id, std::string participant_id, PlayMode mode, std::vector<WordTask> tasks, double now)
    : id_(std::move(id)),
      participant_id_(std::move(participant_id)),
      mode_(mode),
      tasks_(std::move(tasks)),
      presented_at_(now) {
  if (tasks_.empty()) state_ = SessionState::Complete;
}

void Session::require(SessionState expected, const char* action) const {
  if (state_ != expected) {
    throw StateError(std::string("cannot ") + action + " while session is " + to_string(state_));
  }
}

const WordTask& Session::next_word() const {
  require(SessionState::AwaitingGuess, "fetch a word");
  return tasks_[cursor_];
}

GuessOutcome Session::submit_guess(const std::string& text, double now) {
  require(SessionState::AwaitingGuess, "guess");
  ++guesses_;
  const bool correct = to_lower_ascii(text) == tasks_[cursor_].word;
  if (correct) {
    state_ = SessionState::AwaitingRating;
    resolved_at_ = now;
  }
  return {correct, guesses_};
}

void Session::submit_skip(double now) {
  require(SessionState::AwaitingGuess, "skip");
  skipped_ = true;
  resolved_at_ = now;
  state_ = SessionState::AwaitingRating;
}

GameplayRecord Session::submit_rating(std::optional<int> urd, const IwdModel& model, double now) {
  require(SessionState::AwaitingRating, "rate");
  if (urd && (*urd < 1 || *urd > 10)) throw InputError("rating must be between 1 and 10");

  const auto& task = tasks_[cursor_];
  GameplayRecord rec;
  rec.participant_id = participant_id_;
  rec.session_id = id_;
  rec.word = task.word;
  rec.scramble = task.scramble;
  rec.time_taken = std::max(0.0, resolved_at_ - presented_at_);
  rec.num_guesses = guesses_;
  rec.was_skipped = skipped_;
  rec.urd = urd;
  rec.presentation_index = task.position;
  const auto score = model.score(rec);
  rec.iwd_crisp = score.iwd;
  rec.iwd_category = score.category;
  records_.push_back(rec);

  ++cursor_;
  guesses_ = 0;
  skipped_ = false;
  presented_at_ = now;
  state_ = cursor_ < tasks_.size() ? SessionState::AwaitingGuess : SessionState::Complete;
  return rec;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double steady_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

SessionManager::SessionManager(std::vector<WordTask> tasks, std::shared_ptr<const IwdModel> model,
                               std::shared_ptr<RecordLog> log, Clock clock)
    : tasks_(std::move(tasks)),
      model_(std::move(model)),
      log_(std::move(log)),
      clock_(clock ? std::move(clock) : Clock(steady_seconds)) {
  if (!model_) throw InputError("session manager needs a model");
}

std::string SessionManager::create(const std::string& participant_id, PlayMode mode,
                                   std::optional<std::uint64_t> seed) {
  if (participant_id.empty()) throw InputError("participant_id is required");
  const std::uint64_t n = ++counter_;
  const std::string id = "s" + std::to_string(n);
  auto tasks = tasks_;
  if (mode == PlayMode::Daily) tasks = daily_sample(tasks_, seed.value_or(fnv1a(participant_id) ^ n));
  auto slot = std::make_shared<Slot>(Session(id, participant_id, mode, std::move(tasks), clock_()));
  std::lock_guard lock(registry_mutex_);
  sessions_.emplace(id, std::move(slot));
  return id;
}

std::shared_ptr<SessionManager::Slot> SessionManager::find(const std::string& session_id) {
  std::lock_guard lock(registry_mutex_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) throw NotFoundError("no session '" + session_id + "'");
  return it->second;
}

WordTask SessionManager::word(const std::string& session_id) {
  auto slot = find(session_id);
  std::lock_guard lock(slot->mutex);
  return slot->session.next_word();
}

GuessOutcome SessionManager::guess(const std::string& session_id, const std::string& text) {
  auto slot = find(session_id);
  std::lock_guard lock(slot->mutex);
  return slot->session.submit_guess(text, clock_());
}

void SessionManager::skip(const std::string& session_id) {
  auto slot = find(session_id);
  std::lock_guard lock(slot->mutex);
  slot->session.submit_skip(clock_());
}

GameplayRecord SessionManager::rate(const std::string& session_id, std::optional<int> urd) {
  auto slot = find(session_id);
  std::lock_guard lock(slot->mutex);
  auto rec = slot->session.submit_rating(urd, *model_, clock_());
  if (log_) log_->append(rec);
  return rec;
}

SessionSummary SessionManager::summary(const std::string& session_id) {
  auto slot = find(session_id);
  std::lock_guard lock(slot->mutex);
  const auto& s = slot->session;
  return {s.id(), s.participant_id(), s.mode(), s.state(), s.tasks().size(), s.records()};
}

std::vector<std::size_t> replay_mismatches(const std::vector<GameplayRecord>& log, const IwdModel& model) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < log.size(); ++i) {
    const auto score = model.score(log[i]);
    if (!log[i].iwd_category || *log[i].iwd_category != score.category || !log[i].iwd_crisp ||
        *log[i].iwd_crisp != score.iwd) {
      bad.push_back(i);
    }
  }
  return bad;
}

}  // namespace cast

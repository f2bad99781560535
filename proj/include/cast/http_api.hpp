#pragma once

#include <memory>
#include <string>

#include "cast/session.hpp"

namespace cast {

// JSON-over-HTTP front end for a SessionManager:
//   POST /sessions                {participant_id, mode, seed?} -> {session_id}
//   GET  /sessions/{id}/word      -> {task_id, scramble, position}
//   POST /sessions/{id}/guess     {text} -> {correct, guesses_so_far}
//   POST /sessions/{id}/skip      -> {}
//   POST /sessions/{id}/rating    {urd?} -> {iwd_crisp, iwd_category}
//   GET  /sessions/{id}/summary   -> {session_id, participant_id, mode, state, task_count, records}
// Errors come back as {error} with 400 (bad input), 404 (unknown session)
// or 409 (wrong state).
class HttpService {
public:
  explicit HttpService(SessionManager& sessions);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Blocks until stop() is called. Returns false if the port cannot be bound.
  bool listen(const std::string& host, int port);

  // Binds an ephemeral port (returned, or -1) without starting the loop.
  int bind_any_port(const std::string& host);
  bool listen_after_bind();

  void stop();
  bool is_running() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cast

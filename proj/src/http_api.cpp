#include "cast/http_api.hpp"

#include <httplib.h>

#include <json.hpp>

#include "cast/error.hpp"
#include "cast/records.hpp"

namespace cast {

using nlohmann::json;

struct HttpService::Impl {
  SessionManager& sessions;
  httplib::Server server;

  explicit Impl(SessionManager& s) : sessions(s) { routes(); }

  static void reply(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  }

  template <typename F>
  static void guarded(httplib::Response& res, F&& f) {
    try {
      f();
    } catch (const NotFoundError& e) {
      reply(res, 404, {{"error", e.what()}});
    } catch (const StateError& e) {
      reply(res, 409, {{"error", e.what()}});
    } catch (const json::exception& e) {
      reply(res, 400, {{"error", std::string("bad request body: ") + e.what()}});
    } catch (const Error& e) {
      reply(res, 400, {{"error", e.what()}});
    }
  }

  static json body_of(const httplib::Request& req) {
    if (req.body.empty()) return json::object();
    auto j = json::parse(req.body);
    if (!j.is_object()) throw InputError("request body must be a JSON object");
    return j;
  }

  void routes() {
    server.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto body = body_of(req);
        const auto participant = body.at("participant_id").get<std::string>();
        const auto mode = play_mode_from_string(body.value("mode", std::string("full")));
        std::optional<std::uint64_t> seed;
        if (body.contains("seed") && !body.at("seed").is_null()) seed = body.at("seed").get<std::uint64_t>();
        reply(res, 201, {{"session_id", sessions.create(participant, mode, seed)}});
      });
    });

    server.Get(R"(/sessions/([^/]+)/word)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto task = sessions.word(req.matches[1]);
        reply(res, 200, {{"task_id", task.task_id}, {"scramble", task.scramble}, {"position", task.position}});
      });
    });

    server.Post(R"(/sessions/([^/]+)/guess)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto text = body_of(req).at("text").get<std::string>();
        const auto outcome = sessions.guess(req.matches[1], text);
        reply(res, 200, {{"correct", outcome.correct}, {"guesses_so_far", outcome.guesses_so_far}});
      });
    });

    server.Post(R"(/sessions/([^/]+)/skip)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        sessions.skip(req.matches[1]);
        reply(res, 200, json::object());
      });
    });

    server.Post(R"(/sessions/([^/]+)/rating)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto body = body_of(req);
        std::optional<int> urd;
        if (body.contains("urd") && !body.at("urd").is_null()) urd = body.at("urd").get<int>();
        const auto rec = sessions.rate(req.matches[1], urd);
        reply(res, 200, {{"iwd_crisp", *rec.iwd_crisp}, {"iwd_category", to_string(*rec.iwd_category)}});
      });
    });

    server.Get(R"(/sessions/([^/]+)/summary)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto s = sessions.summary(req.matches[1]);
        json records = json::array();
        for (const auto& r : s.records) records.push_back(to_json(r));
        reply(res, 200,
              {{"session_id", s.session_id},
               {"participant_id", s.participant_id},
               {"mode", to_string(s.mode)},
               {"state", to_string(s.state)},
               {"task_count", s.task_count},
               {"records", records}});
      });
    });
  }
};

HttpService::HttpService(SessionManager& sessions) : impl_(std::make_unique<Impl>(sessions)) {}

HttpService::~HttpService() { stop(); }

bool HttpService::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int HttpService::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool HttpService::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpService::stop() {
  if (impl_) impl_->server.stop();
}

bool HttpService::is_running() const { return impl_->server.is_running(); }

}  // namespace cast

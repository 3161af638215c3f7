#include "malleable/service/server.hpp"

#include <functional>
#include <mutex>
#include <vector>

#include <httplib.h>

namespace malleable::service {

using nlohmann::json;

int http_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::unknown_session:
    case ErrorCode::unknown_view:
    case ErrorCode::unknown_attribute:
    case ErrorCode::unknown_item:
    case ErrorCode::unknown_collection:
    case ErrorCode::unknown_link:
      return 404;
    case ErrorCode::seq_conflict:
    case ErrorCode::seq_gap:
      return 409;
    case ErrorCode::provider_failure:
      return 502;
    case ErrorCode::storage_failure:
      return 500;
    default:
      return 422;
  }
}

namespace {

constexpr const char* kJson = "application/json";

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, int status, std::string_view code, const std::string& message) {
  send_json(res, status, {{"error", code}, {"message", message}});
}

void guarded(httplib::Response& res, const std::function<void()>& handler) {
  try {
    handler();
  } catch (const Error& e) {
    send_error(res, http_status(e.code()), to_string(e.code()), e.what());
  } catch (const json::parse_error& e) {
    send_error(res, 400, "malformed-request", e.what());
  } catch (const json::exception& e) {
    send_error(res, 422, "invalid-argument", e.what());
  } catch (const std::exception& e) {
    send_error(res, 500, "internal", e.what());
  }
}

json body_of(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  return json::parse(req.body);
}

std::optional<std::int64_t> int_param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return std::nullopt;
  const auto text = req.get_param_value(name);
  try {
    std::size_t used = 0;
    const auto value = std::stoll(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::invalid_argument, std::string("query parameter '") + name + "' must be an integer");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    if (comma > start) parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

}  // namespace

struct HttpServer::Feeds {
  std::mutex mutex;
  std::vector<std::weak_ptr<Subscription>> live;
  bool stopping = false;
};

HttpServer::HttpServer(Service& service)
    : service_(service), server_(std::make_unique<httplib::Server>()), feeds_(std::make_unique<Feeds>()) {
  server_->new_task_queue = [] { return new httplib::ThreadPool(32); };
  install_routes();
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = server_->bind_to_any_port(host);
    if (bound <= 0) throw Error(ErrorCode::configuration, "cannot bind to " + host);
    return bound;
  }
  if (!server_->bind_to_port(host, port)) {
    throw Error(ErrorCode::configuration, "cannot bind to " + host + ":" + std::to_string(port) + " (port in use?)");
  }
  return port;
}

void HttpServer::serve() { server_->listen_after_bind(); }

int HttpServer::start(const std::string& host, int port) {
  const int bound = bind(host, port);
  thread_ = std::thread([this] { serve(); });
  server_->wait_until_ready();
  return bound;
}

void HttpServer::stop() {
  {
    std::lock_guard lock(feeds_->mutex);
    feeds_->stopping = true;
    for (auto& weak : feeds_->live) {
      if (auto sub = weak.lock()) sub->close();
    }
    feeds_->live.clear();
  }
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

void HttpServer::install_routes() {
  auto& s = *server_;
  Service& api = service_;

  s.Get("/health", [](const httplib::Request&, httplib::Response& res) { send_json(res, 200, {{"ok", true}}); });

  s.Get("/corpora", [&api](const httplib::Request&, httplib::Response& res) {
    guarded(res, [&] { send_json(res, 200, api.corpora()); });
  });

  s.Post("/sessions", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send_json(res, 201, api.create_session(body_of(req))); });
  });

  s.Get("/sessions/:s/graph", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send_json(res, 200, api.graph(req.path_params.at("s"))); });
  });

  s.Patch("/sessions/:s/views/:v", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      send_json(res, 200, api.patch_view(req.path_params.at("s"), req.path_params.at("v"), body_of(req)));
    });
  });

  s.Delete("/sessions/:s/views/:v", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      send_json(res, 200, api.remove_overview(req.path_params.at("s"), req.path_params.at("v"), body_of(req)));
    });
  });

  s.Post("/sessions/:s/overviews", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      auto body = api.add_overview(req.path_params.at("s"), body_of(req));
      send_json(res, body.value("replayed", false) ? 200 : 201, body);
    });
  });

  s.Post("/sessions/:s/moves", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send_json(res, 200, api.move_item(req.path_params.at("s"), body_of(req))); });
  });

  s.Post("/sessions/:s/views/:v/open", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      send_json(res, 200, api.open_detail(req.path_params.at("s"), req.path_params.at("v"), body_of(req)));
    });
  });

  s.Post("/sessions/:s/views/:v/close", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      send_json(res, 200, api.close_detail(req.path_params.at("s"), req.path_params.at("v"), body_of(req)));
    });
  });

  s.Post("/sessions/:s/views/:v/prompt", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      send_json(res, 200, api.prompt(req.path_params.at("s"), req.path_params.at("v"), body_of(req)));
    });
  });

  s.Get("/sessions/:s/views/:v/rows", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      RowsQuery query;
      if (auto size = int_param(req, "page_size")) {
        if (*size <= 0) throw Error(ErrorCode::invalid_argument, "page_size must be positive");
        query.page_size = static_cast<std::size_t>(*size);
      }
      if (req.has_param("cursor")) query.cursor = req.get_param_value("cursor");
      send_json(res, 200, api.rows(req.path_params.at("s"), req.path_params.at("v"), query));
    });
  });

  s.Get("/sessions/:s/views/:v/suggestions", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto attrs = split_csv(req.get_param_value("attrs"));
      send_json(res, 200, api.suggestions(req.path_params.at("s"), req.path_params.at("v"), attrs));
    });
  });

  s.Get("/sessions/:s/log", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      res.status = 200;
      res.set_content(api.log_ndjson(req.path_params.at("s")), "application/x-ndjson");
    });
  });

  s.Get("/sessions/:s/analytics", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto& id = req.path_params.at("s");
      const auto analytics = api.analytics(id, int_param(req, "start"), int_param(req, "end"));
      if (req.get_param_value("format") == "csv") {
        const journal::SessionMatrixInput input{id, analytics};
        res.status = 200;
        res.set_content(journal::matrix_to_csv(journal::export_matrix({&input, 1})), "text/csv");
        return;
      }
      auto body = journal::analytics_to_json(analytics);
      body["session_id"] = id;
      send_json(res, 200, body);
    });
  });

  s.Get("/analytics/matrix", [&api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto matrix = api.matrix();
      if (req.get_param_value("format") == "json") {
        json rows = json::array();
        for (const auto& row : matrix.rows) {
          json cells = json::array();
          for (const auto& cell : row.cells) cells.push_back(cell ? json(journal::to_string(*cell)) : json(nullptr));
          rows.push_back({{"attr", row.attr}, {"synthesized", row.synthesized}, {"cells", std::move(cells)}});
        }
        send_json(res, 200, {{"sessions", matrix.sessions}, {"rows", std::move(rows)}});
        return;
      }
      res.status = 200;
      res.set_content(journal::matrix_to_csv(matrix), "text/csv");
    });
  });

  s.Get("/sessions/:s/events", [this, &api](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      auto session = api.session(req.path_params.at("s"));
      auto sub = session->subscribe();
      {
        std::lock_guard lock(feeds_->mutex);
        if (feeds_->stopping) throw Error(ErrorCode::configuration, "server is stopping");
        std::erase_if(feeds_->live, [](const auto& weak) { return weak.expired(); });
        feeds_->live.push_back(sub);
      }
      res.set_header("Cache-Control", "no-cache");
      res.set_chunked_content_provider(
          "text/event-stream",
          [session, sub](std::size_t, httplib::DataSink& sink) {
            auto frame = sub->next(std::chrono::seconds(15));
            if (sub->closed()) {
              sink.done();
              return true;
            }
            const std::string chunk = frame ? "data: " + frame->dump() + "\n\n" : std::string(": keepalive\n\n");
            return sink.write(chunk.data(), chunk.size());
          },
          [sub](bool) { sub->close(); });
    });
  });
}

}  // namespace malleable::service

#pragma once

#include <memory>
#include <string>
#include <thread>

#include "malleable/error.hpp"
#include "malleable/service/service.hpp"

namespace httplib {
class Server;
}

namespace malleable::service {

/// HTTP status for an engine error: 404 for unknown session, view,
/// attribute, item, collection or link; 409 for seq conflicts; 502 for
/// provider failures; 500 for storage failures; 422 otherwise.
int http_status(ErrorCode code) noexcept;

/// JSON-over-HTTP front end for a Service, plus a text/event-stream feed of
/// graph diffs per session at GET /sessions/{s}/events.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds host:port (port 0 picks a free one) and returns the bound port.
  /// Throws Error(configuration) when the port is unavailable.
  int bind(const std::string& host, int port);
  /// Serves on the bound socket until stop(). Blocks.
  void serve();
  /// bind() + serve() on a background thread; returns the bound port.
  int start(const std::string& host, int port);
  void stop();

 private:
  void install_routes();

  struct Feeds;

  Service& service_;
  std::unique_ptr<httplib::Server> server_;
  std::unique_ptr<Feeds> feeds_;
  std::thread thread_;
};

}  // namespace malleable::service

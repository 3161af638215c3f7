// Command-line entry point: run the service, validate corpora, replay and
// analyze session logs.

#include <csignal>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "malleable/error.hpp"
#include "malleable/journal/analytics.hpp"
#include "malleable/journal/event_log.hpp"
#include "malleable/model/corpus_io.hpp"
#include "malleable/service/server.hpp"
#include "malleable/view/operations.hpp"
#include "malleable/view/serialize.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace malleable;

namespace {

int run_serve(service::ServiceConfig config) {
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  service::Service api(config);
  service::HttpServer server(api);
  const int port = server.start(config.host, config.port);
  std::cerr << "malleable: serving " << api.catalog().ids().size() << " corpora on http://" << config.host << ":"
            << port << " (preset " << config.options.preset << ", provider " << config.provider.kind << ")\n";
  int received = 0;
  sigwait(&signals, &received);
  std::cerr << "malleable: shutting down\n";
  server.stop();
  return 0;
}

int run_validate(const std::vector<std::string>& paths) {
  int failures = 0;
  for (const auto& path : paths) {
    try {
      const auto collection = model::load_corpus_file(path);
      std::cout << path << ": ok (" << collection.id() << ", " << collection.schema().size() << " attributes, "
                << collection.items().size() << " items)\n";
    } catch (const Error& e) {
      std::cout << path << ": " << to_string(e.code()) << ": " << e.what() << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::configuration, "cannot read '" + path + "'");
  return json::parse(in);
}

int run_replay(const std::string& initial_path, const std::string& log_path, bool hash_only) {
  const auto initial = view::graph_from_json(read_json(initial_path));
  const auto events = journal::read_log(log_path);
  const auto graph = view::replay(initial, events);
  if (hash_only) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(view::graph_hash(graph)));
    std::cout << buffer << "\n";
  } else {
    std::cout << view::graph_to_json(graph).dump(2) << "\n";
  }
  return 0;
}

journal::SessionWindow window_for(const std::vector<journal::CustomizationEvent>& events,
                                  std::optional<std::int64_t> start, std::optional<std::int64_t> end) {
  journal::SessionWindow window;
  window.end_ms = end;
  if (start) {
    window.start_ms = *start;
  } else if (!events.empty()) {
    window.start_ms = events.front().timestamp_ms;
    for (const auto& e : events) window.start_ms = std::min(window.start_ms, e.timestamp_ms);
  }
  return window;
}

int run_analyze(const std::string& log_path, std::optional<std::int64_t> start, std::optional<std::int64_t> end) {
  const auto events = journal::read_log(log_path);
  const auto analytics = journal::analyze(events, window_for(events, start, end));
  std::cout << journal::analytics_to_json(analytics).dump(2) << "\n";
  return 0;
}

int run_export(const std::vector<std::string>& logs, const std::string& format) {
  std::vector<journal::SessionMatrixInput> inputs;
  for (const auto& path : logs) {
    const auto events = journal::read_log(path);
    std::string id = fs::path(path).stem().string();
    if (!events.empty()) id = events.front().session_id;
    inputs.push_back({id, journal::analyze(events, window_for(events, std::nullopt, std::nullopt))});
  }
  const auto matrix = journal::export_matrix(inputs);
  if (format == "json") {
    json rows = json::array();
    for (const auto& row : matrix.rows) {
      json cells = json::array();
      for (const auto& cell : row.cells) cells.push_back(cell ? json(journal::to_string(*cell)) : json(nullptr));
      rows.push_back({{"attr", row.attr}, {"synthesized", row.synthesized}, {"cells", std::move(cells)}});
    }
    std::cout << json{{"sessions", matrix.sessions}, {"rows", rows}}.dump(2) << "\n";
  } else {
    std::cout << journal::matrix_to_csv(matrix);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Malleable overview-detail interface engine"};
  app.require_subcommand(1);

  service::ServiceConfig config;
  std::vector<std::string> corpora;
  std::string log_dir;
  std::string mock_rules;
  int http_timeout = 30;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--host", config.host, "Interface to bind")->envname("MALLEABLE_HOST")->capture_default_str();
  serve->add_option("--port", config.port, "Port to listen on (0 picks one)")
      ->envname("MALLEABLE_PORT")
      ->capture_default_str();
  serve->add_option("--corpus", corpora, "Corpus JSON file (repeatable)")->envname("MALLEABLE_CORPUS");
  serve->add_option("--preset", config.options.preset, "Initial configuration for new sessions")
      ->envname("MALLEABLE_PRESET")
      ->check(CLI::IsMember({"default", "shopping-default", "booking-default"}))
      ->capture_default_str();
  serve->add_option("--provider", config.provider.kind, "Synthesis provider")
      ->envname("MALLEABLE_PROVIDER")
      ->check(CLI::IsMember({"mock", "http"}))
      ->capture_default_str();
  serve->add_option("--http-base-url", config.provider.http.base_url, "Completion endpoint for --provider http")
      ->envname("MALLEABLE_HTTP_BASE_URL");
  serve->add_option("--http-api-key-env", config.provider.http.api_key_env,
                    "Environment variable holding the provider bearer token")
      ->envname("MALLEABLE_HTTP_API_KEY_ENV");
  serve->add_option("--http-model", config.provider.http.model, "Model name sent to the provider")
      ->envname("MALLEABLE_HTTP_MODEL");
  serve->add_option("--http-timeout", http_timeout, "Provider timeout in seconds")->capture_default_str();
  serve->add_option("--mock-rules", mock_rules, "Extra mock provider rules (JSON)")->check(CLI::ExistingFile);
  serve->add_option("--log-dir", log_dir, "Directory for session logs (in memory when omitted)")
      ->envname("MALLEABLE_LOG_DIR");
  serve->add_flag("--fsync", config.options.fsync_on_append, "fsync the session log after every event");
  serve->add_option("--max-parallel", config.options.synthesis.max_parallel, "Concurrent provider calls")
      ->capture_default_str();

  std::vector<std::string> validate_paths;
  auto* validate = app.add_subcommand("validate", "Check corpus files");
  validate->add_option("corpus", validate_paths, "Corpus JSON files")->required()->check(CLI::ExistingFile);

  std::string initial_path, log_path;
  bool hash_only = false;
  auto* replay = app.add_subcommand("replay", "Rebuild a session graph from its log");
  replay->add_option("--initial", initial_path, "Initial graph JSON (<session>.initial.json)")
      ->required()
      ->check(CLI::ExistingFile);
  replay->add_option("--log", log_path, "Session log (<session>.ndjson)")->required()->check(CLI::ExistingFile);
  replay->add_flag("--hash", hash_only, "Print only the graph hash");

  std::string analyze_log;
  std::optional<std::int64_t> start, end;
  auto* analyze = app.add_subcommand("analyze", "Customization analytics for one session log");
  analyze->add_option("log", analyze_log, "Session log")->required()->check(CLI::ExistingFile);
  analyze->add_option("--start", start, "Window start, UTC ms (default: first event)");
  analyze->add_option("--end", end, "Window end, UTC ms (default: last event)");

  std::vector<std::string> export_logs;
  std::string format = "csv";
  auto* export_matrix = app.add_subcommand("export-matrix", "Attribute interaction matrix across session logs");
  export_matrix->add_option("logs", export_logs, "Session logs")->required()->check(CLI::ExistingFile);
  export_matrix->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*serve) {
      for (const auto& c : corpora) config.corpus_paths.emplace_back(c);
      if (!log_dir.empty()) config.options.log_dir = log_dir;
      if (!mock_rules.empty()) config.provider.mock_rules = mock_rules;
      config.provider.http.timeout = std::chrono::seconds(http_timeout);
      return run_serve(std::move(config));
    }
    if (*validate) return run_validate(validate_paths);
    if (*replay) return run_replay(initial_path, log_path, hash_only);
    if (*analyze) return run_analyze(analyze_log, start, end);
    if (*export_matrix) return run_export(export_logs, format);
  } catch (const Error& e) {
    std::cerr << "malleable: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "malleable: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "malleable/journal/analytics.hpp"
#include "malleable/service/session.hpp"
#include "malleable/synthesis/http_provider.hpp"
#include "malleable/synthesis/provider.hpp"
#include "malleable/synthesis/synthesizer.hpp"
#include "malleable/view/catalog.hpp"

namespace malleable::service {

struct ProviderConfig {
  /// "mock" or "http".
  std::string kind = "mock";
  synthesis::HttpProviderConfig http;
  /// Extra mock rules, consulted before the built-in ones.
  std::optional<std::filesystem::path> mock_rules;
};

struct ServiceOptions {
  std::string preset = "default";
  /// Session logs go to <log_dir>/<session>.ndjson; in memory when unset.
  std::optional<std::filesystem::path> log_dir;
  bool fsync_on_append = false;
  synthesis::SynthesisOptions synthesis;
  Clock clock = system_clock_ms;
  /// Budget, in code points, for text cells shown in overviews.
  std::size_t overview_text_budget = 80;
};

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::vector<std::filesystem::path> corpus_paths;
  ProviderConfig provider;
  ServiceOptions options;
};

/// Loads every corpus into a catalog with its default surfaced attributes.
/// Throws Error(configuration) when the list is empty or a file fails.
std::shared_ptr<view::Catalog> load_catalog(const std::vector<std::filesystem::path>& paths);

std::shared_ptr<synthesis::SynthesisProvider> make_provider(const ProviderConfig& config);

struct RowsQuery {
  std::size_t page_size = 50;
  std::string cursor;
};

/// The JSON API behind the HTTP routes. Every method throws Error on
/// failure; the HTTP layer maps codes to statuses.
class Service {
 public:
  static constexpr std::size_t kMaxPageSize = 1000;

  Service(std::shared_ptr<const view::Catalog> catalog, std::shared_ptr<synthesis::SynthesisProvider> provider,
          ServiceOptions options = {});
  explicit Service(const ServiceConfig& config);

  const view::Catalog& catalog() const noexcept { return *catalog_; }
  const ServiceOptions& options() const noexcept { return options_; }

  nlohmann::json corpora() const;

  /// Body {preset?}. Returns {session_id, seq, graph}.
  nlohmann::json create_session(const nlohmann::json& body);
  /// Throws Error(unknown_session).
  std::shared_ptr<Session> session(const std::string& id) const;
  std::vector<std::string> session_ids() const;

  nlohmann::json graph(const std::string& session_id) const;

  /// Body {op, ...op fields, client_seq?, expected_seq?} with op one of
  /// surface, hide, sort, filter, remove_filter, layout, od_layout,
  /// detail_multiplicity, rename.
  nlohmann::json patch_view(const std::string& session_id, const std::string& view_id, const nlohmann::json& body);
  /// Body {title, collection?, empty_start?, layout?}.
  nlohmann::json add_overview(const std::string& session_id, const nlohmann::json& body);
  nlohmann::json remove_overview(const std::string& session_id, const std::string& view_id,
                                 const nlohmann::json& body);
  /// Body {from, to, item}.
  nlohmann::json move_item(const std::string& session_id, const nlohmann::json& body);
  /// Body {item}. Navigation only; nothing is logged.
  nlohmann::json open_detail(const std::string& session_id, const std::string& overview_id,
                             const nlohmann::json& body);
  nlohmann::json close_detail(const std::string& session_id, const std::string& overview_id,
                              const nlohmann::json& body);
  /// Body {prompt, mode?, attr?}; mode is attribute (default), filter,
  /// transform or autofill. Logged as one prompt_synthesis event.
  nlohmann::json prompt(const std::string& session_id, const std::string& view_id, const nlohmann::json& body);

  nlohmann::json rows(const std::string& session_id, const std::string& view_id, const RowsQuery& query) const;
  nlohmann::json suggestions(const std::string& session_id, const std::string& view_id,
                             const std::vector<std::string>& attrs) const;

  std::string log_ndjson(const std::string& session_id) const;
  /// Window defaults to [session creation, last event].
  journal::SessionAnalytics analytics(const std::string& session_id, std::optional<std::int64_t> start_ms,
                                      std::optional<std::int64_t> end_ms) const;
  /// Matrix over every session with analysable activity.
  journal::InteractionMatrix matrix() const;

 private:
  nlohmann::json view_payload(const Snapshot& snapshot, const std::string& view_id, const RowsQuery& query) const;
  nlohmann::json mutate(const std::string& session_id, const nlohmann::json& body,
                        const std::function<Mutation(const Snapshot&)>& build);

  std::shared_ptr<const view::Catalog> catalog_;
  std::shared_ptr<synthesis::SynthesisProvider> provider_;
  ServiceOptions options_;

  mutable std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_session_ = 1;
};

}  // namespace malleable::service

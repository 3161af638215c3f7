#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "malleable/journal/event_log.hpp"
#include "malleable/view/catalog.hpp"
#include "malleable/view/detail_state.hpp"
#include "malleable/view/operations.hpp"

namespace malleable::service {

using Clock = std::function<std::int64_t()>;

/// Wall-clock UTC milliseconds.
std::int64_t system_clock_ms();

/// Immutable state published after every mutation.
struct Snapshot {
  view::ViewGraph graph;
  view::DetailState detail;
  std::uint64_t seq = 0;
  nlohmann::json graph_json;
};

/// Optimistic-concurrency fields a client may attach to a mutation.
struct MutationMeta {
  /// Client-chosen, strictly increasing per session; a repeated value
  /// returns the recorded response without applying anything again.
  std::optional<std::uint64_t> client_seq;
  /// Rejects the mutation with seq_conflict unless the session is at this seq.
  std::optional<std::uint64_t> expected_seq;
};

/// What a mutation wants to commit, computed from the current snapshot.
struct Mutation {
  std::vector<journal::EventBody> events;
  view::ViewGraph graph;
  std::optional<view::DetailState> detail;
  /// Builds the response body from the committed snapshot and its events.
  std::function<nlohmann::json(const Snapshot&, const std::vector<journal::CustomizationEvent>&)> respond;
};

struct MutationResult {
  nlohmann::json body;
  bool replayed = false;
};

class Session;

/// Live-update feed for one subscriber. Frames are {seq, diff} with a JSON
/// Patch from the previous graph; the first frame, and the first after the
/// buffer overflowed, is {seq, resync: true, graph}.
class Subscription {
 public:
  static constexpr std::size_t kDefaultCapacity = 64;

  /// nullopt on timeout or once closed.
  std::optional<nlohmann::json> next(std::chrono::milliseconds timeout);
  bool closed() const;
  void close();

 private:
  friend class Session;
  explicit Subscription(std::function<std::shared_ptr<const Snapshot>()> current, std::size_t capacity);
  void push(nlohmann::json frame);

  std::function<std::shared_ptr<const Snapshot>()> current_;
  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::condition_variable ready_;
  std::deque<nlohmann::json> frames_;
  bool resync_ = true;
  bool closed_ = false;
};

/// One user's configuration: an initial graph plus an append-only log that
/// replays to the current graph. Mutations are serialized; readers work on
/// immutable snapshots.
class Session {
 public:
  Session(std::string id, std::shared_ptr<const view::Catalog> catalog, view::ViewGraph initial,
          std::unique_ptr<journal::EventLog> log, Clock clock = system_clock_ms);
  ~Session();

  const std::string& id() const noexcept { return id_; }
  std::int64_t created_at_ms() const noexcept { return created_at_; }
  const view::Catalog& catalog() const noexcept { return *catalog_; }
  const view::ViewGraph& initial_graph() const noexcept { return initial_; }
  journal::EventLog& log() noexcept { return *log_; }

  std::shared_ptr<const Snapshot> snapshot() const;

  /// Runs `build` against the current snapshot under the session's writer
  /// lock, logs the events, publishes the new snapshot and notifies
  /// subscribers. Errors: seq_conflict for a stale client_seq or an
  /// expected_seq mismatch; anything `build` throws.
  MutationResult mutate(const MutationMeta& meta, const std::function<Mutation(const Snapshot&)>& build);

  std::shared_ptr<Subscription> subscribe(std::size_t capacity = Subscription::kDefaultCapacity);
  void close_subscriptions();

 private:
  void publish(const std::shared_ptr<const Snapshot>& previous, const std::shared_ptr<const Snapshot>& next);

  static constexpr std::size_t kReplayCacheSize = 256;

  std::string id_;
  std::shared_ptr<const view::Catalog> catalog_;
  view::ViewGraph initial_;
  std::unique_ptr<journal::EventLog> log_;
  Clock clock_;
  std::int64_t created_at_;

  std::mutex writer_;
  mutable std::mutex snapshot_mutex_;
  std::shared_ptr<const Snapshot> snapshot_;

  std::optional<std::uint64_t> last_client_seq_;
  std::map<std::uint64_t, nlohmann::json> replay_cache_;

  std::mutex subscribers_mutex_;
  std::vector<std::weak_ptr<Subscription>> subscribers_;
};

}  // namespace malleable::service

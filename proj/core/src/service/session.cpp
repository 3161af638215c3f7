#include "malleable/service/session.hpp"

#include "malleable/error.hpp"
#include "malleable/view/serialize.hpp"

namespace malleable::service {

using nlohmann::json;

std::int64_t system_clock_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::system_clock::now().time_since_epoch())
      .count();
}

Subscription::Subscription(std::function<std::shared_ptr<const Snapshot>()> current, std::size_t capacity)
    : current_(std::move(current)), capacity_(capacity == 0 ? 1 : capacity) {}

void Subscription::push(json frame) {
  {
    std::lock_guard lock(mutex_);
    if (closed_ || resync_) return;
    if (frames_.size() >= capacity_) {
      frames_.clear();
      resync_ = true;
    } else {
      frames_.push_back(std::move(frame));
    }
  }
  ready_.notify_one();
}

std::optional<json> Subscription::next(std::chrono::milliseconds timeout) {
  std::unique_lock lock(mutex_);
  ready_.wait_for(lock, timeout, [&] { return closed_ || resync_ || !frames_.empty(); });
  if (closed_) return std::nullopt;
  if (resync_) {
    resync_ = false;
    frames_.clear();
    const auto snapshot = current_();
    return json{{"seq", snapshot->seq}, {"resync", true}, {"graph", snapshot->graph_json}};
  }
  if (frames_.empty()) return std::nullopt;
  auto frame = std::move(frames_.front());
  frames_.pop_front();
  return frame;
}

bool Subscription::closed() const {
  std::lock_guard lock(mutex_);
  return closed_;
}

void Subscription::close() {
  {
    std::lock_guard lock(mutex_);
    closed_ = true;
    frames_.clear();
  }
  ready_.notify_all();
}

Session::Session(std::string id, std::shared_ptr<const view::Catalog> catalog, view::ViewGraph initial,
                 std::unique_ptr<journal::EventLog> log, Clock clock)
    : id_(std::move(id)),
      catalog_(std::move(catalog)),
      initial_(std::move(initial)),
      log_(std::move(log)),
      clock_(std::move(clock)),
      created_at_(clock_()) {
  view::validate_graph(*catalog_, initial_);
  auto first = std::make_shared<Snapshot>();
  const auto events = log_->events();
  first->graph = view::replay(initial_, events);
  first->seq = events.empty() ? 0 : events.back().seq;
  first->graph_json = view::graph_to_json(first->graph);
  snapshot_ = std::move(first);
}

Session::~Session() { close_subscriptions(); }

std::shared_ptr<const Snapshot> Session::snapshot() const {
  std::lock_guard lock(snapshot_mutex_);
  return snapshot_;
}

MutationResult Session::mutate(const MutationMeta& meta, const std::function<Mutation(const Snapshot&)>& build) {
  std::lock_guard writer(writer_);
  if (meta.client_seq) {
    if (auto cached = replay_cache_.find(*meta.client_seq); cached != replay_cache_.end()) {
      return {cached->second, true};
    }
    if (last_client_seq_ && *meta.client_seq <= *last_client_seq_) {
      throw Error(ErrorCode::seq_conflict, "client_seq " + std::to_string(*meta.client_seq) +
                                               " is older than the last applied " +
                                               std::to_string(*last_client_seq_));
    }
  }
  const auto current = snapshot();
  if (meta.expected_seq && *meta.expected_seq != current->seq) {
    throw Error(ErrorCode::seq_conflict, "session is at seq " + std::to_string(current->seq) + ", expected " +
                                             std::to_string(*meta.expected_seq));
  }

  Mutation mutation = build(*current);

  std::vector<journal::CustomizationEvent> logged;
  logged.reserve(mutation.events.size());
  std::uint64_t seq = current->seq;
  const auto now = clock_();
  try {
    for (auto& body : mutation.events) {
      journal::CustomizationEvent event{++seq, now, id_, std::move(body)};
      log_->append(event);
      logged.push_back(std::move(event));
    }
  } catch (...) {
    if (!logged.empty()) {
      // Part of the mutation reached the log; state must follow the log.
      auto recovered = std::make_shared<Snapshot>();
      recovered->graph = view::replay(current->graph, logged);
      recovered->detail = current->detail;
      recovered->seq = logged.back().seq;
      recovered->graph_json = view::graph_to_json(recovered->graph);
      std::shared_ptr<const Snapshot> published = recovered;
      {
        std::lock_guard lock(snapshot_mutex_);
        snapshot_ = published;
      }
      publish(current, published);
    }
    throw;
  }

  auto next = std::make_shared<Snapshot>();
  next->graph = std::move(mutation.graph);
  next->detail = mutation.detail ? std::move(*mutation.detail) : current->detail;
  next->seq = seq;
  next->graph_json = logged.empty() ? current->graph_json : view::graph_to_json(next->graph);
  std::shared_ptr<const Snapshot> published = next;
  {
    std::lock_guard lock(snapshot_mutex_);
    snapshot_ = published;
  }

  json body = mutation.respond ? mutation.respond(*published, logged) : json::object();
  if (meta.client_seq) {
    last_client_seq_ = *meta.client_seq;
    replay_cache_.emplace(*meta.client_seq, body);
    while (replay_cache_.size() > kReplayCacheSize) replay_cache_.erase(replay_cache_.begin());
  }
  if (!logged.empty()) publish(current, published);
  return {std::move(body), false};
}

void Session::publish(const std::shared_ptr<const Snapshot>& previous, const std::shared_ptr<const Snapshot>& next) {
  const json frame{{"seq", next->seq}, {"diff", json::diff(previous->graph_json, next->graph_json)}};
  std::lock_guard lock(subscribers_mutex_);
  auto it = subscribers_.begin();
  while (it != subscribers_.end()) {
    if (auto sub = it->lock()) {
      sub->push(frame);
      ++it;
    } else {
      it = subscribers_.erase(it);
    }
  }
}

std::shared_ptr<Subscription> Session::subscribe(std::size_t capacity) {
  std::shared_ptr<Subscription> sub(new Subscription([this] { return snapshot(); }, capacity));
  std::lock_guard lock(subscribers_mutex_);
  subscribers_.push_back(sub);
  return sub;
}

void Session::close_subscriptions() {
  std::lock_guard lock(subscribers_mutex_);
  for (auto& weak : subscribers_) {
    if (auto sub = weak.lock()) sub->close();
  }
  subscribers_.clear();
}

}  // namespace malleable::service

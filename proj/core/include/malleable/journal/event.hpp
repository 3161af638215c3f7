#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace malleable::journal {

/// The three customization dimensions of an overview-detail interface.
enum class Dimension { content, composition, layout };

enum class EventKind {
  surface,
  hide,
  sort,
  filter,
  add_overview,
  remove_overview,
  rename,
  move_item,
  overview_layout,
  od_layout,
  detail_multiplicity,
  prompt_synthesis,
};

/// Fixed, total mapping from operation kind to dimension.
Dimension dimension_of(EventKind kind) noexcept;

std::string_view to_string(Dimension dimension) noexcept;
std::string_view to_string(EventKind kind) noexcept;
std::optional<Dimension> dimension_from_string(std::string_view name) noexcept;
std::optional<EventKind> event_kind_from_string(std::string_view name) noexcept;

/// What an operation did, independent of when and where it was logged.
/// `payload` carries everything the fold needs to reproduce the change.
struct EventBody {
  EventKind kind = EventKind::surface;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> attrs;

  friend bool operator==(const EventBody&, const EventBody&) = default;
};

struct CustomizationEvent {
  std::uint64_t seq = 0;
  std::int64_t timestamp_ms = 0;
  std::string session_id;
  EventBody body;

  Dimension dimension() const noexcept { return dimension_of(body.kind); }
  friend bool operator==(const CustomizationEvent&, const CustomizationEvent&) = default;
};

/// One NDJSON record: exactly {seq, ts, session, dimension, kind, payload, attrs}.
nlohmann::json event_to_json(const CustomizationEvent& event);
/// Throws Error(malformed_document) on missing fields or a dimension that
/// disagrees with the kind.
CustomizationEvent event_from_json(const nlohmann::json& json);

}  // namespace malleable::journal

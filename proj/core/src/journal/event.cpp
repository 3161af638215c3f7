#include "malleable/journal/event.hpp"

#include <array>

#include "malleable/error.hpp"

namespace malleable::journal {
namespace {

constexpr std::array<std::pair<EventKind, std::string_view>, 12> kKinds{{
    {EventKind::surface, "surface"},
    {EventKind::hide, "hide"},
    {EventKind::sort, "sort"},
    {EventKind::filter, "filter"},
    {EventKind::add_overview, "add_overview"},
    {EventKind::remove_overview, "remove_overview"},
    {EventKind::rename, "rename"},
    {EventKind::move_item, "move_item"},
    {EventKind::overview_layout, "overview_layout"},
    {EventKind::od_layout, "od_layout"},
    {EventKind::detail_multiplicity, "detail_multiplicity"},
    {EventKind::prompt_synthesis, "prompt_synthesis"},
}};

}  // namespace

Dimension dimension_of(EventKind kind) noexcept {
  switch (kind) {
    case EventKind::surface:
    case EventKind::hide:
    case EventKind::sort:
    case EventKind::filter:
    case EventKind::prompt_synthesis:
      return Dimension::content;
    case EventKind::add_overview:
    case EventKind::remove_overview:
    case EventKind::rename:
    case EventKind::move_item:
      return Dimension::composition;
    case EventKind::overview_layout:
    case EventKind::od_layout:
    case EventKind::detail_multiplicity:
      return Dimension::layout;
  }
  return Dimension::content;
}

std::string_view to_string(Dimension dimension) noexcept {
  switch (dimension) {
    case Dimension::content: return "content";
    case Dimension::composition: return "composition";
    case Dimension::layout: return "layout";
  }
  return "content";
}

std::string_view to_string(EventKind kind) noexcept {
  for (const auto& [k, name] : kKinds) {
    if (k == kind) return name;
  }
  return "surface";
}

std::optional<Dimension> dimension_from_string(std::string_view name) noexcept {
  if (name == "content") return Dimension::content;
  if (name == "composition") return Dimension::composition;
  if (name == "layout") return Dimension::layout;
  return std::nullopt;
}

std::optional<EventKind> event_kind_from_string(std::string_view name) noexcept {
  for (const auto& [k, n] : kKinds) {
    if (n == name) return k;
  }
  return std::nullopt;
}

nlohmann::json event_to_json(const CustomizationEvent& e) {
  return {{"seq", e.seq},
          {"ts", e.timestamp_ms},
          {"session", e.session_id},
          {"dimension", to_string(e.dimension())},
          {"kind", to_string(e.body.kind)},
          {"payload", e.body.payload},
          {"attrs", e.body.attrs}};
}

CustomizationEvent event_from_json(const nlohmann::json& j) {
  try {
    CustomizationEvent e;
    e.seq = j.at("seq").get<std::uint64_t>();
    e.timestamp_ms = j.at("ts").get<std::int64_t>();
    e.session_id = j.at("session").get<std::string>();
    auto kind = event_kind_from_string(j.at("kind").get<std::string>());
    auto dimension = dimension_from_string(j.at("dimension").get<std::string>());
    if (!kind || !dimension) throw Error(ErrorCode::malformed_document, "unknown event kind or dimension");
    if (dimension_of(*kind) != *dimension) {
      throw Error(ErrorCode::malformed_document, "event dimension does not match its kind");
    }
    e.body.kind = *kind;
    e.body.payload = j.at("payload");
    e.body.attrs = j.at("attrs").get<std::vector<std::string>>();
    return e;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    throw Error(ErrorCode::malformed_document, std::string("malformed event: ") + ex.what());
  }
}

}  // namespace malleable::journal

#include "malleable/query/suggest.hpp"

#include <algorithm>
#include <cctype>

#include "malleable/error.hpp"

namespace malleable::query {
namespace {

using model::AttributeDescriptor;
using model::ValueKind;
using view::OverviewLayout;
using view::OverviewLayoutKind;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool named_one_of(const AttributeDescriptor& d, std::initializer_list<std::string_view> names) {
  const auto id = lower(d.id);
  const auto display = lower(d.display_name);
  return std::any_of(names.begin(), names.end(), [&](std::string_view n) { return id == n || display == n; });
}

const AttributeDescriptor* first_of(const std::vector<AttributeDescriptor>& selected, ValueKind kind) {
  for (const auto& d : selected) {
    if (d.value_kind == kind) return &d;
  }
  return nullptr;
}

}  // namespace

std::vector<RepresentationSuggestion> suggest_representations(const std::vector<AttributeDescriptor>& selected) {
  if (selected.empty()) throw Error(ErrorCode::invalid_argument, "select at least one attribute");
  std::vector<OverviewLayout> layouts;

  std::vector<const AttributeDescriptor*> numeric;
  for (const auto& d : selected) {
    if (d.value_kind == ValueKind::number || d.value_kind == ValueKind::money) numeric.push_back(&d);
  }
  if (numeric.size() >= 2) layouts.push_back({OverviewLayoutKind::scatter, {numeric[0]->id, numeric[1]->id}});
  if (const auto* d = first_of(selected, ValueKind::date)) layouts.push_back({OverviewLayoutKind::timeline, {d->id}});
  if (const auto* d = first_of(selected, ValueKind::color)) {
    layouts.push_back({OverviewLayoutKind::color_space, {d->id}});
  }
  const AttributeDescriptor* lat = nullptr;
  const AttributeDescriptor* lon = nullptr;
  for (const auto& d : selected) {
    if (d.value_kind != ValueKind::number) continue;
    if (!lat && named_one_of(d, {"latitude", "lat"})) lat = &d;
    if (!lon && named_one_of(d, {"longitude", "lon", "lng"})) lon = &d;
  }
  if (lat && lon) layouts.push_back({OverviewLayoutKind::spatial_map, {lat->id, lon->id}});

  layouts.push_back({OverviewLayoutKind::list, {}});
  layouts.push_back({OverviewLayoutKind::grid, {}});
  layouts.push_back({OverviewLayoutKind::table, {}});

  std::vector<RepresentationSuggestion> out;
  for (std::size_t i = 0; i < layouts.size(); ++i) out.push_back({std::move(layouts[i]), i + 1});
  return out;
}

}  // namespace malleable::query

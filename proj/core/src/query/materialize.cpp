#include "malleable/query/materialize.hpp"

#include <algorithm>

#include "malleable/error.hpp"
#include "malleable/query/compare.hpp"
#include "malleable/query/filter.hpp"

namespace malleable::query {
namespace {

using namespace model;
using view::OverviewLayoutKind;

void bind_coordinates(const view::ViewNode& view, const Collection& collection, const Item& item,
                      MaterializedRow& row) {
  if (!view.is_overview()) return;
  const auto& b = view.layout.binding;
  auto bind = [&](const char* key, std::size_t i) {
    if (i < b.size() && collection.find_attribute(b[i])) row.coordinates.emplace(key, collection.get_value(item, b[i]));
  };
  switch (view.layout.kind) {
    case OverviewLayoutKind::scatter: bind("x", 0); bind("y", 1); break;
    case OverviewLayoutKind::spatial_map: bind("lat", 0); bind("lon", 1); break;
    case OverviewLayoutKind::timeline: bind("t", 0); break;
    case OverviewLayoutKind::color_space: bind("color", 0); break;
    default: break;
  }
}

MaterializedRow project(const view::ViewNode& view, const Collection& collection, const Item& item,
                        const std::vector<AttributeId>& attrs) {
  MaterializedRow row{item.item_id, {}, {}};
  row.cells.reserve(attrs.size());
  for (const auto& a : attrs) row.cells.push_back({a, collection.get_value(item, a)});
  bind_coordinates(view, collection, item, row);
  return row;
}

}  // namespace

std::vector<AttributeId> projection(const view::ViewNode& view, const Collection& collection) {
  std::vector<AttributeId> out;
  for (const auto& a : view.surfaced) {
    if (!view.hidden.count(a) && collection.find_attribute(a)) out.push_back(a);
  }
  if (!view.is_overview()) {
    for (const auto& d : collection.schema()) {
      if (!view.hidden.count(d.id) && std::find(out.begin(), out.end(), d.id) == out.end()) out.push_back(d.id);
    }
  }
  return out;
}

std::vector<const Item*> candidate_items(const view::ViewNode& view, const Collection& collection) {
  std::vector<const Item*> out;
  if (view.members) {
    out.reserve(view.members->size());
    for (const auto& id : *view.members) {
      if (const auto* item = collection.find_item(id)) out.push_back(item);
    }
  } else {
    out.reserve(collection.items().size());
    for (const auto& item : collection.items()) out.push_back(&item);
  }
  return out;
}

std::vector<MaterializedRow> materialize(const view::ViewNode& view, const Collection& collection) {
  std::vector<const Item*> items = candidate_items(view, collection);
  std::erase_if(items, [&](const Item* item) { return !passes(view.filters, collection, *item); });
  if (view.sort && collection.find_attribute(view.sort->attr)) {
    const AttributeId& attr = view.sort->attr;
    const bool descending = view.sort->direction == view::SortDirection::desc;
    std::vector<std::pair<AttributeValue, const Item*>> keyed;
    keyed.reserve(items.size());
    for (const Item* item : items) keyed.emplace_back(collection.get_value(*item, attr), item);
    std::stable_sort(keyed.begin(), keyed.end(), [descending](const auto& a, const auto& b) {
      const bool a_missing = is_not_specified(a.first);
      const bool b_missing = is_not_specified(b.first);
      if (a_missing || b_missing) return !a_missing && b_missing;
      const auto order = compare(a.first, b.first);
      return descending ? order > 0 : order < 0;
    });
    for (std::size_t i = 0; i < items.size(); ++i) items[i] = keyed[i].second;
  }
  const auto attrs = projection(view, collection);
  std::vector<MaterializedRow> rows;
  rows.reserve(items.size());
  for (const Item* item : items) rows.push_back(project(view, collection, *item, attrs));
  return rows;
}

MaterializedRow materialize_detail(const view::ViewNode& detail, const Collection& collection, const ItemId& item) {
  return project(detail, collection, collection.item(item), projection(detail, collection));
}

}  // namespace malleable::query

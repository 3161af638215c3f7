#pragma once

#include <map>
#include <string>
#include <vector>

#include "malleable/model/collection.hpp"
#include "malleable/view/graph.hpp"

namespace malleable::query {

struct Cell {
  model::AttributeId attr;
  model::AttributeValue value;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct MaterializedRow {
  model::ItemId item_id;
  /// Follows the view's projection order; hidden attributes never appear.
  std::vector<Cell> cells;
  /// Raw bound values for layouts with axes: "x"/"y" (scatter),
  /// "lat"/"lon" (spatial_map), "t" (timeline), "color" (color_space).
  std::map<std::string, model::AttributeValue> coordinates;

  friend bool operator==(const MaterializedRow&, const MaterializedRow&) = default;
};

/// Attributes a view shows, in order. Overviews: the surfaced list.
/// Detail views: surfaced first, then the rest of the schema, minus hidden.
std::vector<model::AttributeId> projection(const view::ViewNode& view, const model::Collection& collection);

/// Items the view enumerates before filtering: its members, or the whole
/// collection in base order.
std::vector<const model::Item*> candidate_items(const view::ViewNode& view, const model::Collection& collection);

/// Filters, stable-sorts (NotSpecified last in both directions, ties in
/// candidate order) and projects.
std::vector<MaterializedRow> materialize(const view::ViewNode& view, const model::Collection& collection);

/// Full-attribute row for one item as shown by a detail view.
MaterializedRow materialize_detail(const view::ViewNode& detail, const model::Collection& collection,
                                   const model::ItemId& item);

}  // namespace malleable::query

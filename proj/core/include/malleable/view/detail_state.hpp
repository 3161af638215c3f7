#pragma once

#include <map>
#include <vector>

#include "malleable/view/catalog.hpp"
#include "malleable/view/graph.hpp"

namespace malleable::view {

/// Which detail instances are open, per overview. Navigation state, kept
/// apart from the logged configuration.
struct DetailState {
  std::map<ViewId, std::vector<ItemId>> open;

  const std::vector<ItemId>& open_for(const ViewId& overview) const;
  friend bool operator==(const DetailState&, const DetailState&) = default;
};

/// Opens the detail view for `item`. Under one_at_a_time the previous
/// instance for that overview closes; reopening an open item is a no-op.
/// Errors: unknown_view, invalid_argument (not an overview), unknown_item.
DetailState open_detail(const Catalog& catalog, const ViewGraph& graph, DetailState state,
                        const ViewId& overview, const ItemId& item);

DetailState close_detail(DetailState state, const ViewId& overview, const ItemId& item);

}  // namespace malleable::view

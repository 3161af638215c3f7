#include "malleable/view/detail_state.hpp"

#include <algorithm>

#include "malleable/error.hpp"

namespace malleable::view {

const std::vector<ItemId>& DetailState::open_for(const ViewId& overview) const {
  static const std::vector<ItemId> kNone;
  auto it = open.find(overview);
  return it == open.end() ? kNone : it->second;
}

DetailState open_detail(const Catalog& catalog, const ViewGraph& graph, DetailState state,
                        const ViewId& overview, const ItemId& item) {
  const auto& node = graph.node(overview);
  if (!node.is_overview()) throw Error(ErrorCode::invalid_argument, "view '" + overview + "' is not an overview");
  catalog.collection(node.collection_id).item(item);
  if (node.members && std::find(node.members->begin(), node.members->end(), item) == node.members->end()) {
    throw Error(ErrorCode::unknown_item, "item '" + item + "' is not in overview '" + overview + "'");
  }
  const auto* detail = graph.detail_for(overview);
  const auto mode = detail ? detail->multiplicity : DetailMultiplicity::one_at_a_time;
  auto& open = state.open[overview];
  if (std::find(open.begin(), open.end(), item) != open.end()) {
    if (mode == DetailMultiplicity::one_at_a_time) open = {item};
    return state;
  }
  if (mode == DetailMultiplicity::one_at_a_time) open.clear();
  open.push_back(item);
  return state;
}

DetailState close_detail(DetailState state, const ViewId& overview, const ItemId& item) {
  auto it = state.open.find(overview);
  if (it != state.open.end()) std::erase(it->second, item);
  return state;
}

}  // namespace malleable::view

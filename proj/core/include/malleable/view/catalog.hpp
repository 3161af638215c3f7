#pragma once

#include <map>
#include <memory>
#include <string_view>
#include <vector>

#include "malleable/model/collection.hpp"
#include "malleable/view/graph.hpp"

namespace malleable::view {

/// Immutable corpora available to sessions, each with the surfaced set new
/// overviews start from.
class Catalog {
 public:
  /// Throws Error(unknown_attribute) when a default is not in the schema.
  void add(model::Collection collection, std::vector<AttributeId> default_surfaced = {});

  const model::Collection* find(std::string_view id) const;
  /// Throws Error(unknown_collection).
  const model::Collection& collection(std::string_view id) const;
  std::shared_ptr<const model::Collection> shared(std::string_view id) const;
  const std::vector<AttributeId>& default_surfaced(std::string_view id) const;
  std::vector<CollectionId> ids() const;
  bool empty() const noexcept { return entries_.empty(); }

 private:
  struct Entry {
    std::shared_ptr<const model::Collection> collection;
    std::vector<AttributeId> defaults;
  };
  const Entry& entry(std::string_view id) const;

  std::map<CollectionId, Entry, std::less<>> entries_;
};

/// Descriptor for `attr` in `collection_id`, taking session-synthesized
/// attributes into account. nullptr when unknown.
const model::AttributeDescriptor* find_descriptor(const Catalog& catalog, const ViewGraph& graph,
                                                  std::string_view collection_id, std::string_view attr);

/// The base collection with every synthesized attribute of the graph
/// applied in order.
model::Collection effective_collection(const Catalog& catalog, const ViewGraph& graph,
                                       std::string_view collection_id);

}  // namespace malleable::view

#include "malleable/view/catalog.hpp"

#include "malleable/error.hpp"

namespace malleable::view {

void Catalog::add(model::Collection collection, std::vector<AttributeId> default_surfaced) {
  for (const auto& attr : default_surfaced) collection.attribute(attr);
  const CollectionId id = collection.id();
  entries_.insert_or_assign(
      id, Entry{std::make_shared<const model::Collection>(std::move(collection)), std::move(default_surfaced)});
}

const Catalog::Entry& Catalog::entry(std::string_view id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw Error(ErrorCode::unknown_collection, "unknown collection '" + std::string(id) + "'");
  }
  return it->second;
}

const model::Collection* Catalog::find(std::string_view id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : it->second.collection.get();
}

const model::Collection& Catalog::collection(std::string_view id) const { return *entry(id).collection; }

std::shared_ptr<const model::Collection> Catalog::shared(std::string_view id) const { return entry(id).collection; }

const std::vector<AttributeId>& Catalog::default_surfaced(std::string_view id) const { return entry(id).defaults; }

std::vector<CollectionId> Catalog::ids() const {
  std::vector<CollectionId> out;
  for (const auto& [id, _] : entries_) out.push_back(id);
  return out;
}

const model::AttributeDescriptor* find_descriptor(const Catalog& catalog, const ViewGraph& graph,
                                                  std::string_view collection_id, std::string_view attr) {
  for (auto it = graph.synthesized.rbegin(); it != graph.synthesized.rend(); ++it) {
    if (it->collection_id == collection_id && it->descriptor.id == attr) return &it->descriptor;
  }
  const auto* base = catalog.find(collection_id);
  return base ? base->find_attribute(attr) : nullptr;
}

model::Collection effective_collection(const Catalog& catalog, const ViewGraph& graph,
                                       std::string_view collection_id) {
  model::Collection result = catalog.collection(collection_id);
  for (const auto& s : graph.synthesized) {
    if (s.collection_id == collection_id) result = result.with_attribute(s.descriptor, s.values);
  }
  return result;
}

}  // namespace malleable::view

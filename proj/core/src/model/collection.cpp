#include "malleable/model/collection.hpp"

#include <cctype>
#include <functional>
#include <set>

#include "malleable/error.hpp"

namespace malleable::model {

std::string_view to_string(Origin origin) noexcept {
  switch (origin) {
    case Origin::source: return "source";
    case Origin::synthesized: return "synthesized";
    case Origin::derived: return "derived";
  }
  return "source";
}

std::optional<Origin> origin_from_string(std::string_view name) noexcept {
  if (name == "source") return Origin::source;
  if (name == "synthesized") return Origin::synthesized;
  if (name == "derived") return Origin::derived;
  return std::nullopt;
}

std::string normalize_attribute_name(std::string_view raw) {
  std::string out;
  bool pending_space = false;
  for (char c : raw) {
    if (c == '_' || std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

Collection::Collection(CollectionId id, std::string title, std::vector<AttributeDescriptor> schema,
                       std::vector<Item> items)
    : id_(std::move(id)), title_(std::move(title)), schema_(std::move(schema)), items_(std::move(items)) {
  validate();
}

void Collection::validate() {
  if (id_.empty()) throw Error(ErrorCode::schema_violation, "collection id must be non-empty");
  attribute_index_.clear();
  item_index_.clear();
  for (std::size_t i = 0; i < schema_.size(); ++i) {
    const auto& d = schema_[i];
    if (d.id.empty()) throw Error(ErrorCode::schema_violation, "attribute id must be non-empty");
    if (!attribute_index_.emplace(d.id, i).second) {
      throw Error(ErrorCode::schema_violation, "duplicate attribute id '" + d.id + "'");
    }
  }
  for (const auto& d : schema_) {
    const bool derived = d.origin == Origin::derived;
    if (derived && d.source_attributes.empty()) {
      throw Error(ErrorCode::schema_violation, "derived attribute '" + d.id + "' has no source attributes");
    }
    if (!derived && !d.source_attributes.empty()) {
      throw Error(ErrorCode::schema_violation,
                  "attribute '" + d.id + "' lists source attributes but is not derived");
    }
    if ((d.origin == Origin::source) == d.prompt.has_value()) {
      throw Error(ErrorCode::schema_violation,
                  "attribute '" + d.id + "': prompt must be set exactly for synthesized and derived attributes");
    }
    for (const auto& src : d.source_attributes) {
      if (!attribute_index_.count(src)) {
        throw Error(ErrorCode::unknown_source_attribute,
                    "attribute '" + d.id + "' derives from unknown attribute '" + src + "'");
      }
    }
  }
  // Provenance must bottom out at non-derived attributes.
  enum class Mark { none, active, done };
  std::vector<Mark> marks(schema_.size(), Mark::none);
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (marks[i] == Mark::done) return;
    if (marks[i] == Mark::active) {
      throw Error(ErrorCode::schema_violation, "derived attribute cycle through '" + schema_[i].id + "'");
    }
    marks[i] = Mark::active;
    for (const auto& src : schema_[i].source_attributes) visit(attribute_index_.at(src));
    marks[i] = Mark::done;
  };
  for (std::size_t i = 0; i < schema_.size(); ++i) visit(i);

  for (std::size_t i = 0; i < items_.size(); ++i) {
    const auto& item = items_[i];
    if (item.item_id.empty()) throw Error(ErrorCode::schema_violation, "item id must be non-empty");
    if (!item_index_.emplace(item.item_id, i).second) {
      throw Error(ErrorCode::duplicate_item_id, "duplicate item id '" + item.item_id + "'");
    }
    for (const auto& [attr, value] : item.values) {
      if (!attribute_index_.count(attr)) {
        throw Error(ErrorCode::schema_violation,
                    "item '" + item.item_id + "' has value for undeclared attribute '" + attr + "'");
      }
    }
  }
}

const AttributeDescriptor* Collection::find_attribute(std::string_view id) const {
  auto it = attribute_index_.find(std::string(id));
  return it == attribute_index_.end() ? nullptr : &schema_[it->second];
}

const AttributeDescriptor& Collection::attribute(std::string_view id) const {
  if (const auto* d = find_attribute(id)) return *d;
  throw Error(ErrorCode::unknown_attribute,
              "unknown attribute '" + std::string(id) + "' in collection '" + id_ + "'");
}

const Item* Collection::find_item(std::string_view id) const {
  auto it = item_index_.find(std::string(id));
  return it == item_index_.end() ? nullptr : &items_[it->second];
}

const Item& Collection::item(std::string_view id) const {
  if (const auto* i = find_item(id)) return *i;
  throw Error(ErrorCode::unknown_item, "unknown item '" + std::string(id) + "' in collection '" + id_ + "'");
}

std::size_t Collection::index_of(std::string_view item_id) const {
  auto it = item_index_.find(std::string(item_id));
  if (it == item_index_.end()) {
    throw Error(ErrorCode::unknown_item, "unknown item '" + std::string(item_id) + "'");
  }
  return it->second;
}

AttributeValue Collection::get_value(const Item& item, std::string_view attr) const {
  attribute(attr);
  auto it = item.values.find(std::string(attr));
  return it == item.values.end() ? AttributeValue{NotSpecified{}} : it->second;
}

Collection Collection::with_attribute(const AttributeDescriptor& descriptor,
                                      const std::map<ItemId, AttributeValue>& values) const {
  std::vector<AttributeDescriptor> schema = schema_;
  bool replaced = false;
  for (auto& d : schema) {
    if (d.id == descriptor.id) {
      d = descriptor;
      replaced = true;
    }
  }
  if (!replaced) schema.push_back(descriptor);
  std::vector<Item> items = items_;
  for (const auto& [item_id, value] : values) {
    auto it = item_index_.find(item_id);
    if (it == item_index_.end()) {
      throw Error(ErrorCode::unknown_item, "unknown item '" + item_id + "' in collection '" + id_ + "'");
    }
    items[it->second].values[descriptor.id] = value;
  }
  return Collection(id_, title_, std::move(schema), std::move(items));
}

}  // namespace malleable::model

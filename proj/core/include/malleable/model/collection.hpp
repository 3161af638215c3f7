#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "malleable/model/value.hpp"

namespace malleable::model {

using AttributeId = std::string;
using ItemId = std::string;
using CollectionId = std::string;

enum class Origin { source, synthesized, derived };

std::string_view to_string(Origin origin) noexcept;
std::optional<Origin> origin_from_string(std::string_view name) noexcept;

struct AttributeDescriptor {
  AttributeId id;
  std::string display_name;
  ValueKind value_kind = ValueKind::text;
  /// Default currency for money attributes.
  std::optional<std::string> currency;
  Origin origin = Origin::source;
  /// Non-empty iff origin is derived.
  std::vector<AttributeId> source_attributes;
  /// Set iff origin is synthesized or derived.
  std::optional<std::string> prompt;

  friend bool operator==(const AttributeDescriptor&, const AttributeDescriptor&) = default;
};

/// Canonical display form for generated attribute names: trimmed, single
/// spaces, underscores as spaces, first letter upper case.
std::string normalize_attribute_name(std::string_view raw);

struct Item {
  ItemId item_id;
  std::map<AttributeId, AttributeValue> values;

  friend bool operator==(const Item&, const Item&) = default;
};

/// An immutable, validated set of items sharing one attribute schema.
/// Item order is the base order used as the universal sort tie-break.
class Collection {
 public:
  /// Validates every invariant; throws Error on violation.
  Collection(CollectionId id, std::string title, std::vector<AttributeDescriptor> schema,
             std::vector<Item> items);

  const CollectionId& id() const noexcept { return id_; }
  const std::string& title() const noexcept { return title_; }
  const std::vector<AttributeDescriptor>& schema() const noexcept { return schema_; }
  const std::vector<Item>& items() const noexcept { return items_; }

  const AttributeDescriptor* find_attribute(std::string_view id) const;
  /// Throws Error(unknown_attribute).
  const AttributeDescriptor& attribute(std::string_view id) const;

  const Item* find_item(std::string_view id) const;
  /// Throws Error(unknown_item).
  const Item& item(std::string_view id) const;
  std::size_t index_of(std::string_view item_id) const;

  /// Stored value, or NotSpecified when the item lacks the key.
  /// Throws Error(unknown_attribute) when `attr` is not in the schema.
  AttributeValue get_value(const Item& item, std::string_view attr) const;

  /// Copy with `descriptor` added to the schema (or replacing the descriptor
  /// with the same id) and `values` merged into the matching items.
  Collection with_attribute(const AttributeDescriptor& descriptor,
                            const std::map<ItemId, AttributeValue>& values) const;

  friend bool operator==(const Collection& a, const Collection& b) {
    return a.id_ == b.id_ && a.title_ == b.title_ && a.schema_ == b.schema_ && a.items_ == b.items_;
  }

 private:
  void validate();

  CollectionId id_;
  std::string title_;
  std::vector<AttributeDescriptor> schema_;
  std::vector<Item> items_;
  std::unordered_map<std::string, std::size_t> attribute_index_;
  std::unordered_map<std::string, std::size_t> item_index_;
};

}  // namespace malleable::model

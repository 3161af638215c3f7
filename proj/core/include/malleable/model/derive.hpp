#pragma once

#include <map>
#include <optional>
#include <string_view>

#include "malleable/model/collection.hpp"

namespace malleable::model {

/// Built-in derivation rules over an attribute's source values.
enum class Combiner { sum, product, ratio, concat };

std::string_view to_string(Combiner combiner) noexcept;
std::optional<Combiner> combiner_from_string(std::string_view name) noexcept;

/// Applies `combiner` to the sources listed in `descriptor` for every item.
///
/// Total by construction: any NotSpecified or kind-incompatible source yields
/// NotSpecified for that item, as do mixed currencies and division by zero.
///  - sum: all Number, or all Money in one currency.
///  - product: Numbers, optionally scaled onto at most one Money.
///  - ratio: exactly two sources; Number/Number, Money/Money (same currency)
///    gives Number, Money/Number gives Money.
///  - concat: canonical renderings joined with a single space.
///
/// Errors: invalid_argument when descriptor is not derived (or ratio has
/// other than two sources), unknown_source_attribute.
std::map<ItemId, AttributeValue> recompute_derived(const Collection& collection,
                                                   const AttributeDescriptor& descriptor,
                                                   Combiner combiner);

/// Single-item form of the rule above.
AttributeValue combine(Combiner combiner, const std::vector<AttributeValue>& sources);

}  // namespace malleable::model

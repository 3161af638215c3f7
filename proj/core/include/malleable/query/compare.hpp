#pragma once

#include <compare>

#include "malleable/model/value.hpp"

namespace malleable::query {

/// Total order over every pair of values.
///
/// Across kinds: number < money < date < boolean/component < text <
/// image_ref < color < NotSpecified. Within a kind: natural numeric and
/// chronological order; text case-insensitively with a byte-wise
/// tie-break; false < true (components compare by their boolean facet and
/// sort after a Boolean with the same truth value); money by amount when
/// currencies match, else by currency code then amount.
std::strong_ordering compare(const model::AttributeValue& a, const model::AttributeValue& b);

/// Rank of the value's kind in the cross-kind order above.
int kind_rank(const model::AttributeValue& value) noexcept;

}  // namespace malleable::query

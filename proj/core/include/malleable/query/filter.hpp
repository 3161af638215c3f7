#pragma once

#include <vector>

#include "malleable/model/collection.hpp"
#include "malleable/view/graph.hpp"

namespace malleable::query {

/// Predicate semantics:
///   equals            compare(value, operand) == equal
///   contains          case-insensitive substring of the rendered value
///   range             inclusive bounds; value must share the bound's kind
///                     (and currency)
///   is_true           Boolean true, or a component whose facet is on
///   is_not_specified  NotSpecified
/// NotSpecified satisfies only is_not_specified (and negations of the rest).
bool matches(const view::Predicate& predicate, const model::AttributeValue& value);

/// Conjunction of all filters.
bool passes(const std::vector<view::FilterSpec>& filters, const model::Collection& collection,
            const model::Item& item);

}  // namespace malleable::query

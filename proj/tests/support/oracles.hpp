#pragma once

#include <string>
#include <vector>

#include "malleable/model/collection.hpp"
#include "malleable/query/materialize.hpp"
#include "malleable/view/graph.hpp"

// Naive reference implementations, written independently of the engine's
// comparator, filter and materialization code.
namespace malleable::testing::oracle {

/// -1, 0, 1 under the documented cross-kind total order.
int compare(const model::AttributeValue& a, const model::AttributeValue& b);

bool matches(const view::Predicate& predicate, const model::AttributeValue& value);

/// Filter, insertion-sort and project with no shortcuts.
std::vector<query::MaterializedRow> materialize(const view::ViewNode& view, const model::Collection& collection);

}  // namespace malleable::testing::oracle

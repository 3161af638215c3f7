#pragma once

#include <cstddef>
#include <vector>

#include "malleable/model/collection.hpp"
#include "malleable/view/graph.hpp"

namespace malleable::query {

struct RepresentationSuggestion {
  view::OverviewLayout layout;
  std::size_t rank = 0;  // 1 = best

  friend bool operator==(const RepresentationSuggestion&, const RepresentationSuggestion&) = default;
};

/// Rule table, applied in order; each rule fires at most once:
///   1. two number/money attributes -> scatter(x = first, y = second)
///   2. a date attribute            -> timeline
///   3. a color attribute           -> color_space
///   4. latitude + longitude        -> spatial_map
/// followed by the list, grid and table fallbacks.
/// Throws Error(invalid_argument) when `selected` is empty.
std::vector<RepresentationSuggestion> suggest_representations(
    const std::vector<model::AttributeDescriptor>& selected);

}  // namespace malleable::query

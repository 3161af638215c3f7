#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "malleable/journal/event.hpp"
#include "malleable/view/catalog.hpp"
#include "malleable/view/graph.hpp"

namespace malleable::view {

/// Result of a customization: the new graph and the events that produce it
/// from the old one. `graph == replay(old, events)` by construction.
struct Change {
  ViewGraph graph;
  std::vector<journal::EventBody> events;
};

// Content dimension.

/// Surfaces `attrs` (appending, or inserting from `position`), removing them
/// from the hidden set. One event per distinct attribute.
/// Errors: unknown_view, unknown_attribute.
Change surface(const Catalog& catalog, const ViewGraph& graph, const ViewId& view,
               const std::vector<AttributeId>& attrs, std::optional<std::size_t> position = std::nullopt);

/// Moves `attrs` into the hidden set. One event per distinct attribute.
Change hide(const Catalog& catalog, const ViewGraph& graph, const ViewId& view,
            const std::vector<AttributeId>& attrs);

/// nullopt clears the sort. Overviews only.
Change set_sort(const Catalog& catalog, const ViewGraph& graph, const ViewId& view,
                const std::optional<SortSpec>& spec);

/// Filters combine by conjunction. Range predicates need a number, money or
/// date attribute and bounds of the same kind.
Change add_filter(const Catalog& catalog, const ViewGraph& graph, const ViewId& view, const FilterSpec& spec);
Change remove_filter(const Catalog& catalog, const ViewGraph& graph, const ViewId& view, std::size_t index);

// Composition dimension.

struct AddOverviewOptions {
  /// Start with nothing surfaced instead of the collection defaults.
  bool empty_start = false;
  std::optional<OverviewLayout> layout;
};

struct AddedOverview {
  Change change;
  ViewId view_id;
};

/// New user overview over `collection`, initially holding no items. It
/// shares the detail view of the collection's first linked overview.
AddedOverview add_overview(const Catalog& catalog, const ViewGraph& graph, const CollectionId& collection,
                           const std::string& title, const AddOverviewOptions& options = {});

/// Errors: forbidden when `view` is the last overview.
Change remove_overview(const Catalog& catalog, const ViewGraph& graph, const ViewId& view);
Change rename_overview(const Catalog& catalog, const ViewGraph& graph, const ViewId& view, const std::string& title);

/// Moves an item reference between overviews. Moving out of a base
/// (whole-collection) overview copies instead.
Change move_item(const Catalog& catalog, const ViewGraph& graph, const ViewId& from, const ViewId& to,
                 const ItemId& item);

// Layout dimension.

Change set_overview_layout(const Catalog& catalog, const ViewGraph& graph, const ViewId& view,
                           const OverviewLayout& layout);
Change set_od_layout(const Catalog& catalog, const ViewGraph& graph, const ViewId& overview, const ViewId& detail,
                     OverviewDetailLayout layout);
Change set_detail_multiplicity(const Catalog& catalog, const ViewGraph& graph, const ViewId& view,
                               DetailMultiplicity mode);

/// Outcome of a prompt: attributes created or patched, attributes to show,
/// and an optional filter. Logged as a single prompt_synthesis event.
struct SynthesisRecord {
  ViewId view;
  std::string prompt;
  std::string mode;
  std::vector<SynthesizedAttribute> created;
  std::vector<AttributeId> surface;
  std::optional<FilterSpec> filter;
};

Change apply_synthesis(const Catalog& catalog, const ViewGraph& graph, const SynthesisRecord& record);

/// The fold step. Trusts that `event` came from one of the operations above.
ViewGraph apply(ViewGraph graph, const journal::EventBody& event);
ViewGraph replay(ViewGraph initial, std::span<const journal::CustomizationEvent> events);
ViewGraph replay(ViewGraph initial, std::span<const journal::EventBody> events);

// Structural construction used by presets. Validates against the catalog.

/// Throws on duplicate id, unknown collection or attribute, bad layout.
void add_view(const Catalog& catalog, ViewGraph& graph, ViewNode node);
/// Errors: unknown_view, invalid_argument (roles/collections), nesting_cycle.
void add_link(ViewGraph& graph, Link link);
void add_nesting(ViewGraph& graph, Nesting nesting);

/// Checks every ViewGraph invariant; throws Error on the first violation.
void validate_graph(const Catalog& catalog, const ViewGraph& graph);

}  // namespace malleable::view

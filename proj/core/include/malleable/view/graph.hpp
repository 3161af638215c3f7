#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "malleable/model/collection.hpp"

namespace malleable::view {

using model::AttributeId;
using model::CollectionId;
using model::ItemId;
using ViewId = std::string;

enum class Role { overview, detail };

enum class OverviewLayoutKind { list, grid, table, spatial_map, hierarchy, timeline, scatter, color_space };

/// Overview form plus its axis bindings:
///   timeline    [date]
///   scatter     [x: number|money, y: number|money]
///   color_space [color]
///   spatial_map [latitude: number, longitude: number]
///   others      []
struct OverviewLayout {
  OverviewLayoutKind kind = OverviewLayoutKind::list;
  std::vector<AttributeId> binding;

  friend bool operator==(const OverviewLayout&, const OverviewLayout&) = default;
};

enum class OverviewDetailLayout {
  new_page,
  side_by_side,
  in_place_dropdown,
  in_place_replace,
  under_overview,
  above_overview_popup,
};

enum class DetailMultiplicity { one_at_a_time, many_at_a_time };

enum class SortDirection { asc, desc };

struct SortSpec {
  AttributeId attr;
  SortDirection direction = SortDirection::asc;

  friend bool operator==(const SortSpec&, const SortSpec&) = default;
};

/// Filter predicate tree. Immutable once built; copies share the negated
/// subtree.
struct Predicate {
  enum class Op { equals, contains, range, is_true, is_not_specified, negate };

  Op op = Op::is_true;
  std::optional<model::AttributeValue> value;  // equals
  std::string text;                            // contains
  std::optional<model::AttributeValue> lo;     // range, inclusive
  std::optional<model::AttributeValue> hi;     // range, inclusive
  std::shared_ptr<const Predicate> inner;      // negate

  static Predicate equals(model::AttributeValue value);
  static Predicate contains(std::string text);
  static Predicate range(std::optional<model::AttributeValue> lo, std::optional<model::AttributeValue> hi);
  static Predicate is_true();
  static Predicate is_not_specified();
  static Predicate negate(Predicate inner);

  friend bool operator==(const Predicate& a, const Predicate& b);
};

struct FilterSpec {
  AttributeId attr;
  Predicate predicate;

  friend bool operator==(const FilterSpec&, const FilterSpec&) = default;
};

struct ViewNode {
  ViewId view_id;
  Role role = Role::overview;
  CollectionId collection_id;
  std::string title;
  std::vector<AttributeId> surfaced;
  std::set<AttributeId> hidden;
  std::optional<SortSpec> sort;
  std::vector<FilterSpec> filters;
  OverviewLayout layout;                                           // overviews
  DetailMultiplicity multiplicity = DetailMultiplicity::one_at_a_time;  // details
  /// nullopt: the whole bound collection, immutable (search results).
  /// Otherwise a user collection holding references into it.
  std::optional<std::vector<ItemId>> members;

  bool is_overview() const noexcept { return role == Role::overview; }
  friend bool operator==(const ViewNode&, const ViewNode&) = default;
};

struct Link {
  ViewId overview_id;
  ViewId detail_id;
  OverviewDetailLayout layout = OverviewDetailLayout::new_page;

  friend bool operator==(const Link&, const Link&) = default;
};

/// A detail view that embeds an overview (recursion).
struct Nesting {
  ViewId parent_detail_id;
  ViewId child_overview_id;

  friend bool operator==(const Nesting&, const Nesting&) = default;
};

/// An attribute created during a session, with the values it carries.
/// A descriptor id that already exists in the base schema patches values.
struct SynthesizedAttribute {
  CollectionId collection_id;
  model::AttributeDescriptor descriptor;
  std::map<ItemId, model::AttributeValue> values;

  friend bool operator==(const SynthesizedAttribute&, const SynthesizedAttribute&) = default;
};

/// The full malleable configuration of one session. Plain value type; the
/// operations in operations.hpp keep its invariants.
struct ViewGraph {
  std::vector<ViewNode> nodes;  // creation order
  std::vector<Link> links;
  std::vector<Nesting> nesting;
  std::vector<SynthesizedAttribute> synthesized;
  std::uint64_t next_ordinal = 1;

  const ViewNode* find(std::string_view view_id) const;
  ViewNode* find(std::string_view view_id);
  /// Throws Error(unknown_view).
  const ViewNode& node(std::string_view view_id) const;
  ViewNode& node(std::string_view view_id);

  std::vector<ViewId> overview_ids() const;
  const Link* find_link(std::string_view overview_id, std::string_view detail_id) const;
  /// First detail linked from `overview_id`, if any.
  const ViewNode* detail_for(std::string_view overview_id) const;

  friend bool operator==(const ViewGraph&, const ViewGraph&) = default;
};

using DescriptorLookup = std::function<const model::AttributeDescriptor*(std::string_view)>;

/// Checks binding arity and kinds. Throws Error(binding_kind_mismatch) or
/// Error(unknown_attribute).
void validate_layout(const OverviewLayout& layout, const DescriptorLookup& lookup);

/// Containment edges run overview→detail (links) and detail→overview
/// (nesting). True when adding `candidate` would close a loop.
bool nesting_creates_cycle(const ViewGraph& graph, const Nesting& candidate);
bool link_creates_cycle(const ViewGraph& graph, const Link& candidate);

std::string_view to_string(Role role) noexcept;
std::string_view to_string(OverviewLayoutKind kind) noexcept;
std::string_view to_string(OverviewDetailLayout layout) noexcept;
std::string_view to_string(DetailMultiplicity mode) noexcept;
std::string_view to_string(SortDirection direction) noexcept;
std::string_view to_string(Predicate::Op op) noexcept;
std::optional<Role> role_from_string(std::string_view name) noexcept;
std::optional<OverviewLayoutKind> overview_layout_kind_from_string(std::string_view name) noexcept;
std::optional<OverviewDetailLayout> od_layout_from_string(std::string_view name) noexcept;
std::optional<DetailMultiplicity> multiplicity_from_string(std::string_view name) noexcept;
std::optional<SortDirection> sort_direction_from_string(std::string_view name) noexcept;

}  // namespace malleable::view

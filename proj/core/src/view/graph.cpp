#include "malleable/view/graph.hpp"

#include <array>

#include "malleable/error.hpp"

namespace malleable::view {
namespace {

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

constexpr NameTable<OverviewLayoutKind, 8> kOverviewLayouts{{
    {OverviewLayoutKind::list, "list"},
    {OverviewLayoutKind::grid, "grid"},
    {OverviewLayoutKind::table, "table"},
    {OverviewLayoutKind::spatial_map, "spatial_map"},
    {OverviewLayoutKind::hierarchy, "hierarchy"},
    {OverviewLayoutKind::timeline, "timeline"},
    {OverviewLayoutKind::scatter, "scatter"},
    {OverviewLayoutKind::color_space, "color_space"},
}};

constexpr NameTable<OverviewDetailLayout, 6> kOdLayouts{{
    {OverviewDetailLayout::new_page, "new_page"},
    {OverviewDetailLayout::side_by_side, "side_by_side"},
    {OverviewDetailLayout::in_place_dropdown, "in_place_dropdown"},
    {OverviewDetailLayout::in_place_replace, "in_place_replace"},
    {OverviewDetailLayout::under_overview, "under_overview"},
    {OverviewDetailLayout::above_overview_popup, "above_overview_popup"},
}};

constexpr NameTable<DetailMultiplicity, 2> kMultiplicities{{
    {DetailMultiplicity::one_at_a_time, "one_at_a_time"},
    {DetailMultiplicity::many_at_a_time, "many_at_a_time"},
}};

constexpr NameTable<Role, 2> kRoles{{{Role::overview, "overview"}, {Role::detail, "detail"}}};

constexpr NameTable<SortDirection, 2> kDirections{{{SortDirection::asc, "asc"}, {SortDirection::desc, "desc"}}};

constexpr NameTable<Predicate::Op, 6> kPredicateOps{{
    {Predicate::Op::equals, "equals"},
    {Predicate::Op::contains, "contains"},
    {Predicate::Op::range, "range"},
    {Predicate::Op::is_true, "is_true"},
    {Predicate::Op::is_not_specified, "is_not_specified"},
    {Predicate::Op::negate, "negate"},
}};

template <typename E, std::size_t N>
std::string_view name_of(const NameTable<E, N>& table, E value) noexcept {
  for (const auto& [k, name] : table) {
    if (k == value) return name;
  }
  return table.front().second;
}

template <typename E, std::size_t N>
std::optional<E> parse_name(const NameTable<E, N>& table, std::string_view name) noexcept {
  for (const auto& [k, n] : table) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool is_numeric(model::ValueKind k) { return k == model::ValueKind::number || k == model::ValueKind::money; }

// Depth-first reachability over containment edges.
bool reaches(const ViewGraph& graph, const ViewId& from, const ViewId& target) {
  std::vector<ViewId> stack{from};
  std::set<ViewId> seen;
  while (!stack.empty()) {
    ViewId current = stack.back();
    stack.pop_back();
    if (current == target) return true;
    if (!seen.insert(current).second) continue;
    for (const auto& l : graph.links) {
      if (l.overview_id == current) stack.push_back(l.detail_id);
    }
    for (const auto& n : graph.nesting) {
      if (n.parent_detail_id == current) stack.push_back(n.child_overview_id);
    }
  }
  return false;
}

}  // namespace

Predicate Predicate::equals(model::AttributeValue value) {
  Predicate p;
  p.op = Op::equals;
  p.value = std::move(value);
  return p;
}

Predicate Predicate::contains(std::string text) {
  Predicate p;
  p.op = Op::contains;
  p.text = std::move(text);
  return p;
}

Predicate Predicate::range(std::optional<model::AttributeValue> lo, std::optional<model::AttributeValue> hi) {
  Predicate p;
  p.op = Op::range;
  p.lo = std::move(lo);
  p.hi = std::move(hi);
  return p;
}

Predicate Predicate::is_true() {
  Predicate p;
  p.op = Op::is_true;
  return p;
}

Predicate Predicate::is_not_specified() {
  Predicate p;
  p.op = Op::is_not_specified;
  return p;
}

Predicate Predicate::negate(Predicate inner) {
  Predicate p;
  p.op = Op::negate;
  p.inner = std::make_shared<const Predicate>(std::move(inner));
  return p;
}

bool operator==(const Predicate& a, const Predicate& b) {
  if (a.op != b.op || a.value != b.value || a.text != b.text || a.lo != b.lo || a.hi != b.hi) return false;
  if (!a.inner || !b.inner) return !a.inner && !b.inner;
  return *a.inner == *b.inner;
}

const ViewNode* ViewGraph::find(std::string_view view_id) const {
  for (const auto& n : nodes) {
    if (n.view_id == view_id) return &n;
  }
  return nullptr;
}

ViewNode* ViewGraph::find(std::string_view view_id) {
  for (auto& n : nodes) {
    if (n.view_id == view_id) return &n;
  }
  return nullptr;
}

const ViewNode& ViewGraph::node(std::string_view view_id) const {
  if (const auto* n = find(view_id)) return *n;
  throw Error(ErrorCode::unknown_view, "unknown view '" + std::string(view_id) + "'");
}

ViewNode& ViewGraph::node(std::string_view view_id) {
  if (auto* n = find(view_id)) return *n;
  throw Error(ErrorCode::unknown_view, "unknown view '" + std::string(view_id) + "'");
}

std::vector<ViewId> ViewGraph::overview_ids() const {
  std::vector<ViewId> out;
  for (const auto& n : nodes) {
    if (n.is_overview()) out.push_back(n.view_id);
  }
  return out;
}

const Link* ViewGraph::find_link(std::string_view overview_id, std::string_view detail_id) const {
  for (const auto& l : links) {
    if (l.overview_id == overview_id && l.detail_id == detail_id) return &l;
  }
  return nullptr;
}

const ViewNode* ViewGraph::detail_for(std::string_view overview_id) const {
  for (const auto& l : links) {
    if (l.overview_id == overview_id) return find(l.detail_id);
  }
  return nullptr;
}

void validate_layout(const OverviewLayout& layout, const DescriptorLookup& lookup) {
  using model::ValueKind;
  auto kind_of = [&](const AttributeId& id) {
    const auto* d = lookup(id);
    if (!d) throw Error(ErrorCode::unknown_attribute, "unknown attribute '" + id + "' in layout binding");
    return d->value_kind;
  };
  auto mismatch = [&](const std::string& why) {
    throw Error(ErrorCode::binding_kind_mismatch,
                std::string(to_string(layout.kind)) + " layout " + why);
  };
  const auto& b = layout.binding;
  switch (layout.kind) {
    case OverviewLayoutKind::list:
    case OverviewLayoutKind::grid:
    case OverviewLayoutKind::table:
    case OverviewLayoutKind::hierarchy:
      if (!b.empty()) mismatch("takes no attribute binding");
      return;
    case OverviewLayoutKind::timeline:
      if (b.size() != 1) mismatch("binds exactly one date attribute");
      if (kind_of(b[0]) != ValueKind::date) mismatch("needs a date attribute, '" + b[0] + "' is not one");
      return;
    case OverviewLayoutKind::color_space:
      if (b.size() != 1) mismatch("binds exactly one color attribute");
      if (kind_of(b[0]) != ValueKind::color) mismatch("needs a color attribute, '" + b[0] + "' is not one");
      return;
    case OverviewLayoutKind::scatter:
      if (b.size() != 2) mismatch("binds exactly two numeric attributes");
      for (const auto& id : b) {
        if (!is_numeric(kind_of(id))) mismatch("needs number or money attributes, '" + id + "' is neither");
      }
      return;
    case OverviewLayoutKind::spatial_map:
      if (b.size() != 2) mismatch("binds latitude and longitude attributes");
      for (const auto& id : b) {
        if (kind_of(id) != ValueKind::number) mismatch("needs number coordinates, '" + id + "' is not one");
      }
      return;
  }
}

bool nesting_creates_cycle(const ViewGraph& graph, const Nesting& candidate) {
  return reaches(graph, candidate.child_overview_id, candidate.parent_detail_id);
}

bool link_creates_cycle(const ViewGraph& graph, const Link& candidate) {
  return reaches(graph, candidate.detail_id, candidate.overview_id);
}

std::string_view to_string(Role role) noexcept { return name_of(kRoles, role); }
std::string_view to_string(OverviewLayoutKind kind) noexcept { return name_of(kOverviewLayouts, kind); }
std::string_view to_string(OverviewDetailLayout layout) noexcept { return name_of(kOdLayouts, layout); }
std::string_view to_string(DetailMultiplicity mode) noexcept { return name_of(kMultiplicities, mode); }
std::string_view to_string(SortDirection direction) noexcept { return name_of(kDirections, direction); }
std::string_view to_string(Predicate::Op op) noexcept { return name_of(kPredicateOps, op); }

std::optional<Role> role_from_string(std::string_view name) noexcept { return parse_name(kRoles, name); }
std::optional<OverviewLayoutKind> overview_layout_kind_from_string(std::string_view name) noexcept {
  return parse_name(kOverviewLayouts, name);
}
std::optional<OverviewDetailLayout> od_layout_from_string(std::string_view name) noexcept {
  return parse_name(kOdLayouts, name);
}
std::optional<DetailMultiplicity> multiplicity_from_string(std::string_view name) noexcept {
  return parse_name(kMultiplicities, name);
}
std::optional<SortDirection> sort_direction_from_string(std::string_view name) noexcept {
  return parse_name(kDirections, name);
}

}  // namespace malleable::view

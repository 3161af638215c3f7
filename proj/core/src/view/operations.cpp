#include "malleable/view/operations.hpp"

#include <algorithm>

#include "malleable/error.hpp"
#include "malleable/view/serialize.hpp"

namespace malleable::view {
namespace {

using journal::EventBody;
using journal::EventKind;
using nlohmann::json;

const ViewNode& require_overview(const ViewGraph& graph, const ViewId& id) {
  const auto& n = graph.node(id);
  if (!n.is_overview()) throw Error(ErrorCode::invalid_argument, "view '" + id + "' is not an overview");
  return n;
}

const model::AttributeDescriptor& require_attribute(const Catalog& catalog, const ViewGraph& graph,
                                                    const ViewNode& node, const AttributeId& attr) {
  const auto* d = find_descriptor(catalog, graph, node.collection_id, attr);
  if (!d) {
    throw Error(ErrorCode::unknown_attribute,
                "unknown attribute '" + attr + "' for view '" + node.view_id + "'");
  }
  return *d;
}

std::vector<AttributeId> distinct(const std::vector<AttributeId>& attrs) {
  std::vector<AttributeId> out;
  for (const auto& a : attrs) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  return out;
}

Change fold(const ViewGraph& graph, std::vector<EventBody> events) {
  ViewGraph next = graph;
  for (const auto& e : events) next = apply(std::move(next), e);
  return Change{std::move(next), std::move(events)};
}

bool kind_matches_bound(model::ValueKind attr_kind, const model::AttributeValue& bound) {
  auto k = model::kind_of(bound);
  return k && *k == attr_kind;
}

void validate_predicate(const Predicate& p, const model::AttributeDescriptor& d) {
  using model::ValueKind;
  switch (p.op) {
    case Predicate::Op::equals:
      if (!p.value) throw Error(ErrorCode::invalid_argument, "equals filter needs a value");
      return;
    case Predicate::Op::range: {
      if (d.value_kind != ValueKind::number && d.value_kind != ValueKind::money && d.value_kind != ValueKind::date) {
        throw Error(ErrorCode::invalid_argument,
                    "range filter needs a number, money or date attribute; '" + d.id + "' is " +
                        std::string(model::to_string(d.value_kind)));
      }
      for (const auto* bound : {&p.lo, &p.hi}) {
        if (*bound && !kind_matches_bound(d.value_kind, **bound)) {
          throw Error(ErrorCode::invalid_argument, "range bound kind does not match attribute '" + d.id + "'");
        }
      }
      return;
    }
    case Predicate::Op::negate:
      if (!p.inner) throw Error(ErrorCode::invalid_argument, "negate filter needs an inner predicate");
      validate_predicate(*p.inner, d);
      return;
    case Predicate::Op::contains:
    case Predicate::Op::is_true:
    case Predicate::Op::is_not_specified:
      return;
  }
}

void surface_in_place(ViewNode& node, const AttributeId& attr, const json& position) {
  auto& s = node.surfaced;
  s.erase(std::remove(s.begin(), s.end(), attr), s.end());
  node.hidden.erase(attr);
  if (position.is_number_unsigned() || position.is_number_integer()) {
    const auto pos = std::min<std::size_t>(position.get<std::size_t>(), s.size());
    s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), attr);
  } else {
    s.push_back(attr);
  }
}

bool contains_item(const std::vector<ItemId>& items, const ItemId& id) {
  return std::find(items.begin(), items.end(), id) != items.end();
}

}  // namespace

Change surface(const Catalog& catalog, const ViewGraph& graph, const ViewId& view,
               const std::vector<AttributeId>& attrs, std::optional<std::size_t> position) {
  const auto& node = graph.node(view);
  const auto unique = distinct(attrs);
  for (const auto& a : unique) require_attribute(catalog, graph, node, a);
  std::vector<EventBody> events;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    json pos = position ? json(*position + i) : json(nullptr);
    events.push_back({EventKind::surface, {{"view", view}, {"attr", unique[i]}, {"position", pos}}, {unique[i]}});
  }
  return fold(graph, std::move(events));
}

Change hide(const Catalog& catalog, const ViewGraph& graph, const ViewId& view,
            const std::vector<AttributeId>& attrs) {
  const auto& node = graph.node(view);
  const auto unique = distinct(attrs);
  for (const auto& a : unique) require_attribute(catalog, graph, node, a);
  std::vector<EventBody> events;
  for (const auto& a : unique) events.push_back({EventKind::hide, {{"view", view}, {"attr", a}}, {a}});
  return fold(graph, std::move(events));
}

Change set_sort(const Catalog& catalog, const ViewGraph& graph, const ViewId& view,
                const std::optional<SortSpec>& spec) {
  const auto& node = require_overview(graph, view);
  std::vector<std::string> attrs;
  if (spec) {
    require_attribute(catalog, graph, node, spec->attr);
    attrs.push_back(spec->attr);
  }
  return fold(graph, {{EventKind::sort, {{"view", view}, {"sort", sort_to_json(spec)}}, attrs}});
}

Change add_filter(const Catalog& catalog, const ViewGraph& graph, const ViewId& view, const FilterSpec& spec) {
  const auto& node = require_overview(graph, view);
  validate_predicate(spec.predicate, require_attribute(catalog, graph, node, spec.attr));
  return fold(graph, {{EventKind::filter,
                       {{"view", view}, {"action", "add"}, {"filter", filter_to_json(spec)}},
                       {spec.attr}}});
}

Change remove_filter(const Catalog&, const ViewGraph& graph, const ViewId& view, std::size_t index) {
  const auto& node = require_overview(graph, view);
  if (index >= node.filters.size()) {
    throw Error(ErrorCode::index_out_of_range, "view '" + view + "' has " + std::to_string(node.filters.size()) +
                                                   " filters; cannot remove index " + std::to_string(index));
  }
  return fold(graph, {{EventKind::filter,
                       {{"view", view}, {"action", "remove"}, {"index", index}},
                       {node.filters[index].attr}}});
}

AddedOverview add_overview(const Catalog& catalog, const ViewGraph& graph, const CollectionId& collection,
                           const std::string& title, const AddOverviewOptions& options) {
  catalog.collection(collection);
  const std::uint64_t ordinal = graph.next_ordinal;
  ViewNode node;
  node.view_id = "view-" + std::to_string(ordinal);
  while (graph.find(node.view_id)) node.view_id += "'";
  node.role = Role::overview;
  node.collection_id = collection;
  node.title = title;
  if (!options.empty_start) node.surfaced = catalog.default_surfaced(collection);
  node.members = std::vector<ItemId>{};
  if (options.layout) {
    validate_layout(*options.layout, [&](std::string_view a) {
      return find_descriptor(catalog, graph, collection, a);
    });
    node.layout = *options.layout;
  }
  json link = nullptr;
  for (const auto& l : graph.links) {
    const auto* o = graph.find(l.overview_id);
    if (o && o->collection_id == collection) {
      link = {{"detail", l.detail_id}, {"layout", to_string(l.layout)}};
      break;
    }
  }
  ViewId id = node.view_id;
  auto change = fold(graph, {{EventKind::add_overview,
                              {{"ordinal", ordinal}, {"view", node_to_json(node)}, {"link", link}},
                              {}}});
  return {std::move(change), std::move(id)};
}

Change remove_overview(const Catalog&, const ViewGraph& graph, const ViewId& view) {
  const auto& node = require_overview(graph, view);
  if (graph.overview_ids().size() <= 1) {
    throw Error(ErrorCode::forbidden, "cannot remove the last overview '" + view + "'");
  }
  json links = json::array();
  for (const auto& l : graph.links) {
    if (l.overview_id == view) links.push_back({{"detail", l.detail_id}, {"layout", to_string(l.layout)}});
  }
  json nesting = json::array();
  for (const auto& n : graph.nesting) {
    if (n.child_overview_id == view) nesting.push_back(n.parent_detail_id);
  }
  return fold(graph, {{EventKind::remove_overview,
                       {{"view", view}, {"removed", node_to_json(node)}, {"links", links}, {"nesting", nesting}},
                       {}}});
}

Change rename_overview(const Catalog&, const ViewGraph& graph, const ViewId& view, const std::string& title) {
  const auto& node = require_overview(graph, view);
  if (title.empty()) throw Error(ErrorCode::invalid_argument, "overview title must be non-empty");
  return fold(graph, {{EventKind::rename, {{"view", view}, {"from", node.title}, {"title", title}}, {}}});
}

Change move_item(const Catalog& catalog, const ViewGraph& graph, const ViewId& from, const ViewId& to,
                 const ItemId& item) {
  const auto& source = require_overview(graph, from);
  const auto& target = require_overview(graph, to);
  if (from == to) throw Error(ErrorCode::invalid_argument, "move_item needs two distinct overviews");
  if (!target.members) {
    throw Error(ErrorCode::invalid_argument, "overview '" + to + "' shows a whole collection and cannot take items");
  }
  if (source.collection_id != target.collection_id) {
    throw Error(ErrorCode::invalid_argument, "overviews '" + from + "' and '" + to + "' bind different collections");
  }
  catalog.collection(source.collection_id).item(item);
  if (source.members && !contains_item(*source.members, item)) {
    throw Error(ErrorCode::unknown_item, "item '" + item + "' is not in overview '" + from + "'");
  }
  const bool copy = !source.members.has_value();
  return fold(graph, {{EventKind::move_item, {{"from", from}, {"to", to}, {"item", item}, {"copy", copy}}, {}}});
}

Change set_overview_layout(const Catalog& catalog, const ViewGraph& graph, const ViewId& view,
                           const OverviewLayout& layout) {
  const auto& node = require_overview(graph, view);
  validate_layout(layout, [&](std::string_view a) { return find_descriptor(catalog, graph, node.collection_id, a); });
  return fold(graph, {{EventKind::overview_layout, {{"view", view}, {"layout", layout_to_json(layout)}}, layout.binding}});
}

Change set_od_layout(const Catalog&, const ViewGraph& graph, const ViewId& overview, const ViewId& detail,
                     OverviewDetailLayout layout) {
  if (!graph.find_link(overview, detail)) {
    throw Error(ErrorCode::unknown_link, "no link from '" + overview + "' to '" + detail + "'");
  }
  return fold(graph, {{EventKind::od_layout,
                       {{"overview", overview}, {"detail", detail}, {"layout", to_string(layout)}},
                       {}}});
}

Change set_detail_multiplicity(const Catalog&, const ViewGraph& graph, const ViewId& view, DetailMultiplicity mode) {
  const auto& node = graph.node(view);
  if (node.is_overview()) throw Error(ErrorCode::invalid_argument, "view '" + view + "' is not a detail view");
  return fold(graph, {{EventKind::detail_multiplicity, {{"view", view}, {"mode", to_string(mode)}}, {}}});
}

Change apply_synthesis(const Catalog& catalog, const ViewGraph& graph, const SynthesisRecord& record) {
  const auto& node = graph.node(record.view);
  // Validate against the schema as it will be once the new attributes exist.
  ViewGraph probe = graph;
  json created = json::array();
  std::vector<std::string> attrs;
  for (const auto& s : record.created) {
    if (s.collection_id != node.collection_id) {
      throw Error(ErrorCode::invalid_argument, "synthesized attribute targets another collection");
    }
    probe.synthesized.push_back(s);
    created.push_back(synthesized_to_json(s));
    attrs.push_back(s.descriptor.id);
  }
  effective_collection(catalog, probe, node.collection_id);
  for (const auto& a : record.surface) {
    require_attribute(catalog, probe, node, a);
    if (std::find(attrs.begin(), attrs.end(), a) == attrs.end()) attrs.push_back(a);
  }
  json filter = nullptr;
  if (record.filter) {
    if (!node.is_overview()) throw Error(ErrorCode::invalid_argument, "filters apply to overviews only");
    validate_predicate(record.filter->predicate, require_attribute(catalog, probe, node, record.filter->attr));
    filter = filter_to_json(*record.filter);
    if (std::find(attrs.begin(), attrs.end(), record.filter->attr) == attrs.end()) attrs.push_back(record.filter->attr);
  }
  return fold(graph, {{EventKind::prompt_synthesis,
                       {{"view", record.view},
                        {"collection", node.collection_id},
                        {"prompt", record.prompt},
                        {"mode", record.mode},
                        {"created", created},
                        {"surface", record.surface},
                        {"filter", filter}},
                       attrs}});
}

ViewGraph apply(ViewGraph graph, const EventBody& event) {
  const json& p = event.payload;
  switch (event.kind) {
    case EventKind::surface:
      surface_in_place(graph.node(p.at("view").get<std::string>()), p.at("attr").get<std::string>(),
                       p.value("position", json(nullptr)));
      break;
    case EventKind::hide: {
      auto& node = graph.node(p.at("view").get<std::string>());
      const auto attr = p.at("attr").get<std::string>();
      node.surfaced.erase(std::remove(node.surfaced.begin(), node.surfaced.end(), attr), node.surfaced.end());
      node.hidden.insert(attr);
      break;
    }
    case EventKind::sort:
      graph.node(p.at("view").get<std::string>()).sort = sort_from_json(p.at("sort"));
      break;
    case EventKind::filter: {
      auto& node = graph.node(p.at("view").get<std::string>());
      if (p.at("action") == "add") {
        node.filters.push_back(filter_from_json(p.at("filter")));
      } else {
        const auto index = p.at("index").get<std::size_t>();
        if (index >= node.filters.size()) throw Error(ErrorCode::index_out_of_range, "filter index out of range");
        node.filters.erase(node.filters.begin() + static_cast<std::ptrdiff_t>(index));
      }
      break;
    }
    case EventKind::add_overview: {
      ViewNode node = node_from_json(p.at("view"));
      graph.next_ordinal = std::max(graph.next_ordinal, p.at("ordinal").get<std::uint64_t>() + 1);
      if (const auto& link = p.at("link"); !link.is_null()) {
        graph.links.push_back({node.view_id, link.at("detail").get<std::string>(),
                               od_layout_from_string(link.at("layout").get<std::string>()).value()});
      }
      graph.nodes.push_back(std::move(node));
      break;
    }
    case EventKind::remove_overview: {
      const auto id = p.at("view").get<std::string>();
      std::erase_if(graph.nodes, [&](const ViewNode& n) { return n.view_id == id; });
      std::erase_if(graph.links, [&](const Link& l) { return l.overview_id == id; });
      std::erase_if(graph.nesting, [&](const Nesting& n) { return n.child_overview_id == id; });
      break;
    }
    case EventKind::rename:
      graph.node(p.at("view").get<std::string>()).title = p.at("title").get<std::string>();
      break;
    case EventKind::move_item: {
      const auto item = p.at("item").get<std::string>();
      if (!p.at("copy").get<bool>()) {
        auto& source = graph.node(p.at("from").get<std::string>());
        if (source.members) std::erase(*source.members, item);
      }
      auto& target = graph.node(p.at("to").get<std::string>());
      if (!target.members) target.members.emplace();
      if (!contains_item(*target.members, item)) target.members->push_back(item);
      break;
    }
    case EventKind::overview_layout:
      graph.node(p.at("view").get<std::string>()).layout = layout_from_json(p.at("layout"));
      break;
    case EventKind::od_layout: {
      const auto overview = p.at("overview").get<std::string>();
      const auto detail = p.at("detail").get<std::string>();
      const auto layout = od_layout_from_string(p.at("layout").get<std::string>()).value();
      for (auto& l : graph.links) {
        if (l.overview_id == overview && l.detail_id == detail) l.layout = layout;
      }
      break;
    }
    case EventKind::detail_multiplicity:
      graph.node(p.at("view").get<std::string>()).multiplicity =
          multiplicity_from_string(p.at("mode").get<std::string>()).value();
      break;
    case EventKind::prompt_synthesis: {
      for (const auto& c : p.at("created")) {
        SynthesizedAttribute incoming = synthesized_from_json(c);
        auto existing = std::find_if(graph.synthesized.begin(), graph.synthesized.end(), [&](const auto& s) {
          return s.collection_id == incoming.collection_id && s.descriptor.id == incoming.descriptor.id;
        });
        if (existing == graph.synthesized.end()) {
          graph.synthesized.push_back(std::move(incoming));
        } else {
          existing->descriptor = incoming.descriptor;
          for (auto& [item, value] : incoming.values) existing->values.insert_or_assign(item, std::move(value));
        }
      }
      auto& node = graph.node(p.at("view").get<std::string>());
      for (const auto& a : p.at("surface")) surface_in_place(node, a.get<std::string>(), nullptr);
      if (const auto& f = p.at("filter"); !f.is_null()) node.filters.push_back(filter_from_json(f));
      break;
    }
  }
  return graph;
}

ViewGraph replay(ViewGraph initial, std::span<const journal::CustomizationEvent> events) {
  for (const auto& e : events) initial = apply(std::move(initial), e.body);
  return initial;
}

ViewGraph replay(ViewGraph initial, std::span<const EventBody> events) {
  for (const auto& e : events) initial = apply(std::move(initial), e);
  return initial;
}

void add_view(const Catalog& catalog, ViewGraph& graph, ViewNode node) {
  if (node.view_id.empty()) throw Error(ErrorCode::invalid_argument, "view id must be non-empty");
  if (graph.find(node.view_id)) throw Error(ErrorCode::invalid_argument, "duplicate view id '" + node.view_id + "'");
  const auto& collection = catalog.collection(node.collection_id);
  for (const auto& a : node.surfaced) collection.attribute(a);
  for (const auto& a : node.hidden) {
    collection.attribute(a);
    if (std::find(node.surfaced.begin(), node.surfaced.end(), a) != node.surfaced.end()) {
      throw Error(ErrorCode::invalid_argument, "attribute '" + a + "' is both surfaced and hidden");
    }
  }
  if (node.is_overview()) {
    validate_layout(node.layout, [&](std::string_view a) { return collection.find_attribute(a); });
    if (node.members) {
      for (const auto& item : *node.members) collection.item(item);
    }
  }
  graph.nodes.push_back(std::move(node));
}

void add_link(ViewGraph& graph, Link link) {
  const auto& overview = graph.node(link.overview_id);
  const auto& detail = graph.node(link.detail_id);
  if (!overview.is_overview() || detail.is_overview()) {
    throw Error(ErrorCode::invalid_argument, "links run from an overview to a detail view");
  }
  if (overview.collection_id != detail.collection_id) {
    throw Error(ErrorCode::invalid_argument, "linked views must bind the same collection");
  }
  if (graph.find_link(link.overview_id, link.detail_id)) return;
  if (link_creates_cycle(graph, link)) {
    throw Error(ErrorCode::nesting_cycle, "link '" + link.overview_id + "' -> '" + link.detail_id + "' closes a cycle");
  }
  graph.links.push_back(std::move(link));
}

void add_nesting(ViewGraph& graph, Nesting nesting) {
  const auto& parent = graph.node(nesting.parent_detail_id);
  const auto& child = graph.node(nesting.child_overview_id);
  if (parent.is_overview() || !child.is_overview()) {
    throw Error(ErrorCode::invalid_argument, "nesting places an overview inside a detail view");
  }
  if (nesting_creates_cycle(graph, nesting)) {
    throw Error(ErrorCode::nesting_cycle, "nesting '" + nesting.child_overview_id + "' inside '" +
                                              nesting.parent_detail_id + "' closes a cycle");
  }
  graph.nesting.push_back(std::move(nesting));
}

void validate_graph(const Catalog& catalog, const ViewGraph& graph) {
  std::set<ViewId> ids;
  bool any_overview = false;
  for (const auto& n : graph.nodes) {
    if (!ids.insert(n.view_id).second) throw Error(ErrorCode::invalid_argument, "duplicate view id '" + n.view_id + "'");
    catalog.collection(n.collection_id);
    auto lookup = [&](std::string_view a) { return find_descriptor(catalog, graph, n.collection_id, a); };
    for (const auto& a : n.surfaced) {
      if (!lookup(a)) throw Error(ErrorCode::unknown_attribute, "unknown attribute '" + a + "'");
      if (n.hidden.count(a)) throw Error(ErrorCode::invalid_argument, "attribute '" + a + "' is both surfaced and hidden");
    }
    for (const auto& a : n.hidden) {
      if (!lookup(a)) throw Error(ErrorCode::unknown_attribute, "unknown attribute '" + a + "'");
    }
    if (n.is_overview()) {
      any_overview = true;
      validate_layout(n.layout, lookup);
    }
  }
  if (!any_overview) throw Error(ErrorCode::invalid_argument, "graph needs at least one overview");
  ViewGraph partial = graph;
  partial.links.clear();
  partial.nesting.clear();
  for (const auto& l : graph.links) add_link(partial, l);
  for (const auto& n : graph.nesting) add_nesting(partial, n);
}

}  // namespace malleable::view

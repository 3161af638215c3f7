#include "malleable/view/serialize.hpp"

#include "malleable/error.hpp"
#include "malleable/model/corpus_io.hpp"

namespace malleable::view {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what, const json& j) {
  throw Error(ErrorCode::invalid_argument, what + ": " + j.dump());
}

template <typename E, typename Parse>
E parse_enum(const json& j, Parse parse, const char* what) {
  if (!j.is_string()) bad(std::string("expected ") + what, j);
  auto v = parse(j.get<std::string>());
  if (!v) bad(std::string("unknown ") + what, j);
  return *v;
}

std::string get_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) bad(std::string("missing string field '") + key + "'", j);
  return it->get<std::string>();
}

}  // namespace

json layout_to_json(const OverviewLayout& layout) {
  return {{"kind", to_string(layout.kind)}, {"binding", layout.binding}};
}

OverviewLayout layout_from_json(const json& j) {
  if (!j.is_object()) bad("layout must be an object", j);
  OverviewLayout layout;
  layout.kind = parse_enum<OverviewLayoutKind>(j.at("kind"), overview_layout_kind_from_string, "overview layout");
  if (auto b = j.find("binding"); b != j.end() && !b->is_null()) {
    if (!b->is_array()) bad("binding must be an array", j);
    layout.binding = b->get<std::vector<AttributeId>>();
  }
  return layout;
}

json sort_to_json(const std::optional<SortSpec>& sort) {
  if (!sort) return nullptr;
  return {{"attr", sort->attr}, {"direction", to_string(sort->direction)}};
}

std::optional<SortSpec> sort_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_object()) bad("sort must be an object or null", j);
  SortSpec spec;
  spec.attr = get_string(j, "attr");
  if (auto d = j.find("direction"); d != j.end()) {
    spec.direction = parse_enum<SortDirection>(*d, sort_direction_from_string, "sort direction");
  }
  return spec;
}

json predicate_to_json(const Predicate& p) {
  json out{{"op", to_string(p.op)}};
  switch (p.op) {
    case Predicate::Op::equals: out["value"] = model::to_tagged_json(*p.value); break;
    case Predicate::Op::contains: out["text"] = p.text; break;
    case Predicate::Op::range:
      out["lo"] = p.lo ? model::to_tagged_json(*p.lo) : json(nullptr);
      out["hi"] = p.hi ? model::to_tagged_json(*p.hi) : json(nullptr);
      break;
    case Predicate::Op::negate: out["inner"] = predicate_to_json(*p.inner); break;
    case Predicate::Op::is_true:
    case Predicate::Op::is_not_specified: break;
  }
  return out;
}

Predicate predicate_from_json(const json& j, const ValueDecoder& decode) {
  if (!j.is_object() || !j.contains("op")) bad("predicate needs an 'op'", j);
  const std::string op = j["op"].is_string() ? j["op"].get<std::string>() : "";
  if (op == "equals") {
    if (!j.contains("value")) bad("equals needs a value", j);
    return Predicate::equals(decode(j["value"]));
  }
  if (op == "contains") return Predicate::contains(get_string(j, "text"));
  if (op == "range") {
    std::optional<model::AttributeValue> lo, hi;
    if (auto it = j.find("lo"); it != j.end() && !it->is_null()) lo = decode(*it);
    if (auto it = j.find("hi"); it != j.end() && !it->is_null()) hi = decode(*it);
    return Predicate::range(std::move(lo), std::move(hi));
  }
  if (op == "is_true") return Predicate::is_true();
  if (op == "is_not_specified") return Predicate::is_not_specified();
  if (op == "negate") {
    if (!j.contains("inner")) bad("negate needs an inner predicate", j);
    return Predicate::negate(predicate_from_json(j["inner"], decode));
  }
  bad("unknown predicate op", j);
}

json filter_to_json(const FilterSpec& f) { return {{"attr", f.attr}, {"predicate", predicate_to_json(f.predicate)}}; }

FilterSpec filter_from_json(const json& j) { return filter_from_json(j, model::from_tagged_json); }

FilterSpec filter_from_json(const json& j, const ValueDecoder& decode) {
  if (!j.is_object()) bad("filter must be an object", j);
  FilterSpec f;
  f.attr = get_string(j, "attr");
  if (!j.contains("predicate")) bad("filter needs a predicate", j);
  f.predicate = predicate_from_json(j["predicate"], decode);
  return f;
}

json node_to_json(const ViewNode& n) {
  json filters = json::array();
  for (const auto& f : n.filters) filters.push_back(filter_to_json(f));
  json out{{"view_id", n.view_id},
           {"role", to_string(n.role)},
           {"collection_id", n.collection_id},
           {"title", n.title},
           {"surfaced", n.surfaced},
           {"hidden", n.hidden},
           {"sort", sort_to_json(n.sort)},
           {"filters", std::move(filters)},
           {"members", n.members ? json(*n.members) : json(nullptr)}};
  if (n.is_overview()) {
    out["layout"] = layout_to_json(n.layout);
  } else {
    out["multiplicity"] = to_string(n.multiplicity);
  }
  return out;
}

ViewNode node_from_json(const json& j) {
  if (!j.is_object()) bad("view must be an object", j);
  ViewNode n;
  n.view_id = get_string(j, "view_id");
  n.role = parse_enum<Role>(j.at("role"), role_from_string, "role");
  n.collection_id = get_string(j, "collection_id");
  n.title = j.value("title", "");
  n.surfaced = j.value("surfaced", std::vector<AttributeId>{});
  auto hidden = j.value("hidden", std::vector<AttributeId>{});
  n.hidden = std::set<AttributeId>(hidden.begin(), hidden.end());
  n.sort = sort_from_json(j.value("sort", json(nullptr)));
  for (const auto& f : j.value("filters", json::array())) n.filters.push_back(filter_from_json(f));
  if (auto m = j.find("members"); m != j.end() && !m->is_null()) n.members = m->get<std::vector<ItemId>>();
  if (n.is_overview()) {
    if (auto l = j.find("layout"); l != j.end()) n.layout = layout_from_json(*l);
  } else if (auto m = j.find("multiplicity"); m != j.end()) {
    n.multiplicity = parse_enum<DetailMultiplicity>(*m, multiplicity_from_string, "detail multiplicity");
  }
  return n;
}

json synthesized_to_json(const SynthesizedAttribute& a) {
  json values = json::object();
  for (const auto& [item, value] : a.values) values[item] = model::to_tagged_json(value);
  return {{"collection_id", a.collection_id},
          {"descriptor", model::descriptor_to_json(a.descriptor)},
          {"values", std::move(values)}};
}

SynthesizedAttribute synthesized_from_json(const json& j) {
  SynthesizedAttribute a;
  a.collection_id = get_string(j, "collection_id");
  a.descriptor = model::descriptor_from_json(j.at("descriptor"));
  const auto values = j.value("values", json::object());
  for (const auto& [item, value] : values.items()) {
    a.values.emplace(item, model::from_tagged_json(value));
  }
  return a;
}

json graph_to_json(const ViewGraph& g) {
  json views = json::array();
  for (const auto& n : g.nodes) views.push_back(node_to_json(n));
  json links = json::array();
  for (const auto& l : g.links) {
    links.push_back({{"overview", l.overview_id}, {"detail", l.detail_id}, {"layout", to_string(l.layout)}});
  }
  json nesting = json::array();
  for (const auto& n : g.nesting) nesting.push_back({{"parent", n.parent_detail_id}, {"child", n.child_overview_id}});
  json synthesized = json::array();
  for (const auto& a : g.synthesized) synthesized.push_back(synthesized_to_json(a));
  return {{"views", std::move(views)},
          {"links", std::move(links)},
          {"nesting", std::move(nesting)},
          {"synthesized", std::move(synthesized)},
          {"next_ordinal", g.next_ordinal}};
}

ViewGraph graph_from_json(const json& j) {
  if (!j.is_object()) bad("graph must be an object", j);
  ViewGraph g;
  for (const auto& v : j.value("views", json::array())) g.nodes.push_back(node_from_json(v));
  for (const auto& l : j.value("links", json::array())) {
    g.links.push_back({get_string(l, "overview"), get_string(l, "detail"),
                       parse_enum<OverviewDetailLayout>(l.at("layout"), od_layout_from_string, "overview-detail layout")});
  }
  for (const auto& n : j.value("nesting", json::array())) {
    g.nesting.push_back({get_string(n, "parent"), get_string(n, "child")});
  }
  for (const auto& a : j.value("synthesized", json::array())) g.synthesized.push_back(synthesized_from_json(a));
  g.next_ordinal = j.value("next_ordinal", std::uint64_t{1});
  return g;
}

std::uint64_t graph_hash(const ViewGraph& graph) {
  const std::string text = graph_to_json(graph).dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace malleable::view

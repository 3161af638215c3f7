#include "malleable/service/service.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "malleable/error.hpp"
#include "malleable/model/corpus_io.hpp"
#include "malleable/query/materialize.hpp"
#include "malleable/query/render.hpp"
#include "malleable/query/suggest.hpp"
#include "malleable/service/presets.hpp"
#include "malleable/synthesis/mock_provider.hpp"
#include "malleable/view/serialize.hpp"

namespace malleable::service {

namespace fs = std::filesystem;
using nlohmann::json;
using view::Change;
using view::ViewGraph;

std::shared_ptr<view::Catalog> load_catalog(const std::vector<fs::path>& paths) {
  if (paths.empty()) throw Error(ErrorCode::configuration, "at least one --corpus is required");
  auto catalog = std::make_shared<view::Catalog>();
  for (const auto& path : paths) {
    model::Collection collection = [&] {
      try {
        return model::load_corpus_file(path.string());
      } catch (const Error& e) {
        if (e.code() == ErrorCode::configuration) throw;
        throw Error(ErrorCode::configuration, "corpus '" + path.string() + "': " + e.what());
      }
    }();
    if (catalog->find(collection.id())) {
      throw Error(ErrorCode::configuration, "corpus id '" + collection.id() + "' loaded twice");
    }
    auto defaults = default_surfaced_for(collection);
    catalog->add(std::move(collection), std::move(defaults));
  }
  return catalog;
}

std::shared_ptr<synthesis::SynthesisProvider> make_provider(const ProviderConfig& config) {
  if (config.kind == "http") return std::make_shared<synthesis::HttpProvider>(config.http);
  if (config.kind != "mock") throw Error(ErrorCode::configuration, "unknown provider '" + config.kind + "'");
  std::vector<synthesis::MockRule> rules;
  if (config.mock_rules) {
    std::ifstream in(*config.mock_rules);
    if (!in) throw Error(ErrorCode::configuration, "cannot read mock rules '" + config.mock_rules->string() + "'");
    json document;
    try {
      document = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::configuration, "mock rules '" + config.mock_rules->string() + "': " + e.what());
    }
    rules = synthesis::MockProvider::rules_from_json(document);
  }
  for (auto& rule : synthesis::MockProvider::worked_example_rules()) rules.push_back(std::move(rule));
  return std::make_shared<synthesis::MockProvider>(std::move(rules));
}

namespace {

[[noreturn]] void bad_request(const std::string& message) { throw Error(ErrorCode::invalid_argument, message); }

const json& field(const json& body, const char* key) {
  if (!body.is_object()) bad_request("request body must be a JSON object");
  auto it = body.find(key);
  if (it == body.end()) bad_request(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& body, const char* key) {
  const auto& value = field(body, key);
  if (!value.is_string()) bad_request(std::string("field '") + key + "' must be a string");
  return value.get<std::string>();
}

bool is_non_negative_integer(const json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

std::optional<std::uint64_t> optional_seq(const json& body, const char* key) {
  if (!body.is_object()) return std::nullopt;
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return std::nullopt;
  if (!is_non_negative_integer(*it)) bad_request(std::string("field '") + key + "' must be a non-negative integer");
  return it->get<std::uint64_t>();
}

MutationMeta meta_of(const json& body) { return {optional_seq(body, "client_seq"), optional_seq(body, "expected_seq")}; }

std::vector<std::string> attr_list(const json& body) {
  if (body.contains("attrs")) {
    const auto& attrs = body["attrs"];
    if (!attrs.is_array() || attrs.empty() ||
        !std::all_of(attrs.begin(), attrs.end(), [](const json& a) { return a.is_string(); })) {
      bad_request("'attrs' must be a non-empty array of attribute ids");
    }
    return attrs.get<std::vector<std::string>>();
  }
  return {string_field(body, "attr")};
}

template <typename E, typename Parse>
E enum_field(const json& body, const char* key, Parse parse) {
  const auto name = string_field(body, key);
  auto value = parse(name);
  if (!value) bad_request("unknown " + std::string(key) + " '" + name + "'");
  return *value;
}

json events_json(const std::vector<journal::CustomizationEvent>& events) {
  json out = json::array();
  for (const auto& e : events) out.push_back(journal::event_to_json(e));
  return out;
}

Mutation from_change(Change change) {
  Mutation m;
  m.events = std::move(change.events);
  m.graph = std::move(change.graph);
  return m;
}

json cell_json(const query::Cell& cell, bool overview, std::size_t budget) {
  json out{{"attr", cell.attr}, {"value", model::value_to_json(cell.value)}};
  if (overview) {
    auto shown = query::truncate_for_overview(cell.value, budget);
    out["display"] = std::move(shown.display);
    if (shown.truncated) out["truncated"] = true;
  } else {
    out["display"] = query::render_value(cell.value);
  }
  return out;
}

json row_json(const query::MaterializedRow& row, bool overview, std::size_t budget) {
  json cells = json::array();
  for (const auto& cell : row.cells) cells.push_back(cell_json(cell, overview, budget));
  json out{{"item_id", row.item_id}, {"cells", std::move(cells)}};
  if (!row.coordinates.empty()) {
    json coordinates = json::object();
    for (const auto& [axis, value] : row.coordinates) coordinates[axis] = model::value_to_json(value);
    out["coordinates"] = std::move(coordinates);
  }
  return out;
}

std::size_t parse_cursor(const std::string& cursor) {
  if (cursor.empty()) return 0;
  std::size_t offset = 0;
  for (char c : cursor) {
    if (c < '0' || c > '9' || offset > 100000000) bad_request("invalid cursor '" + cursor + "'");
    offset = offset * 10 + static_cast<std::size_t>(c - '0');
  }
  return offset;
}

model::AttributeValue decode_api_value(const json& j, const model::AttributeDescriptor& descriptor) {
  try {
    return model::value_from_json(j, descriptor);
  } catch (const Error&) {
    if (j.is_object() || j.is_string()) {
      try {
        return model::from_tagged_json(j);
      } catch (const std::exception&) {
      }
    }
    throw;
  }
}

view::FilterSpec filter_field(const view::Catalog& catalog, const ViewGraph& graph, const view::ViewNode& node,
                              const json& body) {
  const auto& filter = field(body, "filter");
  const auto attr = string_field(filter, "attr");
  const auto* descriptor = view::find_descriptor(catalog, graph, node.collection_id, attr);
  if (!descriptor) throw Error(ErrorCode::unknown_attribute, "unknown attribute '" + attr + "'");
  return view::filter_from_json(filter, [descriptor](const json& v) { return decode_api_value(v, *descriptor); });
}

}  // namespace

Service::Service(std::shared_ptr<const view::Catalog> catalog, std::shared_ptr<synthesis::SynthesisProvider> provider,
                 ServiceOptions options)
    : catalog_(std::move(catalog)), provider_(std::move(provider)), options_(std::move(options)) {
  if (!catalog_ || catalog_->empty()) throw Error(ErrorCode::configuration, "no corpus loaded");
  if (!provider_) throw Error(ErrorCode::configuration, "no synthesis provider configured");
  build_preset(*catalog_, options_.preset);
  if (options_.log_dir) {
    std::error_code ec;
    fs::create_directories(*options_.log_dir, ec);
    if (ec) throw Error(ErrorCode::configuration, "cannot create log dir '" + options_.log_dir->string() + "'");
  }
}

Service::Service(const ServiceConfig& config)
    : Service(load_catalog(config.corpus_paths), make_provider(config.provider), config.options) {}

json Service::corpora() const {
  json out = json::array();
  for (const auto& id : catalog_->ids()) {
    const auto& c = catalog_->collection(id);
    json schema = json::array();
    for (const auto& d : c.schema()) schema.push_back(model::descriptor_to_json(d));
    out.push_back({{"collection_id", id},
                   {"title", c.title()},
                   {"items", c.items().size()},
                   {"schema", std::move(schema)},
                   {"default_surfaced", catalog_->default_surfaced(id)}});
  }
  return out;
}

json Service::create_session(const json& body) {
  std::string preset = options_.preset;
  if (body.is_object() && body.contains("preset")) preset = string_field(body, "preset");
  auto initial = build_preset(*catalog_, preset);

  std::lock_guard lock(sessions_mutex_);
  std::string id;
  do {
    id = "s" + std::to_string(next_session_++);
  } while (sessions_.count(id) ||
           (options_.log_dir && fs::exists(*options_.log_dir / (id + ".ndjson"))));

  std::unique_ptr<journal::EventLog> log;
  if (options_.log_dir) {
    std::ofstream initial_file(*options_.log_dir / (id + ".initial.json"));
    initial_file << view::graph_to_json(initial).dump(1) << "\n";
    if (!initial_file) throw Error(ErrorCode::storage_failure, "cannot write initial graph for session " + id);
    log = std::make_unique<journal::EventLog>(*options_.log_dir / (id + ".ndjson"),
                                              journal::EventLogOptions{options_.fsync_on_append});
  } else {
    log = std::make_unique<journal::EventLog>();
  }
  auto session = std::make_shared<Session>(id, catalog_, std::move(initial), std::move(log), options_.clock);
  sessions_.emplace(id, session);
  const auto snapshot = session->snapshot();
  return {{"session_id", id}, {"preset", preset}, {"seq", snapshot->seq}, {"graph", snapshot->graph_json}};
}

std::shared_ptr<Session> Service::session(const std::string& id) const {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::unknown_session, "unknown session '" + id + "'");
  return it->second;
}

std::vector<std::string> Service::session_ids() const {
  std::lock_guard lock(sessions_mutex_);
  std::vector<std::string> ids;
  for (const auto& [id, _] : sessions_) ids.push_back(id);
  return ids;
}

json Service::graph(const std::string& session_id) const {
  const auto snapshot = session(session_id)->snapshot();
  json open = json::object();
  for (const auto& [overview, items] : snapshot->detail.open) open[overview] = items;
  return {{"session_id", session_id}, {"seq", snapshot->seq}, {"graph", snapshot->graph_json}, {"open_details", open}};
}

json Service::view_payload(const Snapshot& snapshot, const std::string& view_id, const RowsQuery& query) const {
  if (query.page_size == 0 || query.page_size > kMaxPageSize) {
    bad_request("page_size must be between 1 and " + std::to_string(kMaxPageSize));
  }
  const auto& node = snapshot.graph.node(view_id);
  const auto collection = view::effective_collection(*catalog_, snapshot.graph, node.collection_id);
  const bool overview = node.is_overview();

  std::vector<query::MaterializedRow> all;
  json layout;
  if (overview) {
    all = query::materialize(node, collection);
    json details = json::array();
    for (const auto& link : snapshot.graph.links) {
      if (link.overview_id == view_id) {
        details.push_back({{"detail", link.detail_id}, {"layout", view::to_string(link.layout)}});
      }
    }
    layout = view::layout_to_json(node.layout);
    layout["role"] = "overview";
    layout["details"] = std::move(details);
  } else {
    std::vector<model::ItemId> open;
    for (const auto& link : snapshot.graph.links) {
      if (link.detail_id != view_id) continue;
      for (const auto& item : snapshot.detail.open_for(link.overview_id)) {
        if (std::find(open.begin(), open.end(), item) == open.end()) open.push_back(item);
      }
    }
    for (const auto& item : open) {
      if (collection.find_item(item)) all.push_back(query::materialize_detail(node, collection, item));
    }
    layout = {{"role", "detail"}, {"multiplicity", view::to_string(node.multiplicity)}};
  }

  json attributes = json::array();
  for (const auto& attr : query::projection(node, collection)) {
    const auto& d = collection.attribute(attr);
    attributes.push_back({{"id", d.id},
                          {"display_name", d.display_name},
                          {"value_kind", model::to_string(d.value_kind)},
                          {"origin", model::to_string(d.origin)}});
  }

  const std::size_t offset = std::min(parse_cursor(query.cursor), all.size());
  const std::size_t end = std::min(all.size(), offset + query.page_size);
  json rows = json::array();
  for (std::size_t i = offset; i < end; ++i) {
    rows.push_back(row_json(all[i], overview, options_.overview_text_budget));
  }
  return {{"view_id", view_id},
          {"title", node.title},
          {"seq", snapshot.seq},
          {"layout", std::move(layout)},
          {"attributes", std::move(attributes)},
          {"rows", std::move(rows)},
          {"total", all.size()},
          {"next_cursor", end < all.size() ? json(std::to_string(end)) : json(nullptr)}};
}

json Service::rows(const std::string& session_id, const std::string& view_id, const RowsQuery& query) const {
  const auto snapshot = session(session_id)->snapshot();
  return view_payload(*snapshot, view_id, query);
}

json Service::suggestions(const std::string& session_id, const std::string& view_id,
                          const std::vector<std::string>& attrs) const {
  const auto snapshot = session(session_id)->snapshot();
  const auto& node = snapshot->graph.node(view_id);
  std::vector<model::AttributeDescriptor> selected;
  for (const auto& attr : attrs) {
    const auto* d = view::find_descriptor(*catalog_, snapshot->graph, node.collection_id, attr);
    if (!d) throw Error(ErrorCode::unknown_attribute, "unknown attribute '" + attr + "'");
    selected.push_back(*d);
  }
  json out = json::array();
  for (const auto& s : query::suggest_representations(selected)) {
    out.push_back({{"rank", s.rank}, {"layout", view::layout_to_json(s.layout)}});
  }
  return out;
}

json Service::mutate(const std::string& session_id, const json& body,
                     const std::function<Mutation(const Snapshot&)>& build) {
  auto s = session(session_id);
  auto result = s->mutate(meta_of(body), build);
  if (result.replayed) result.body["replayed"] = true;
  return std::move(result.body);
}

json Service::patch_view(const std::string& session_id, const std::string& view_id, const json& body) {
  const auto op = string_field(body, "op");
  return mutate(session_id, body, [&](const Snapshot& snap) {
    const auto& g = snap.graph;
    const auto& cat = *catalog_;
    Change change;
    if (op == "surface") {
      std::optional<std::size_t> position;
      if (auto p = body.find("position"); p != body.end() && !p->is_null()) {
        if (!is_non_negative_integer(*p)) bad_request("'position' must be a non-negative integer");
        position = p->get<std::size_t>();
      }
      change = view::surface(cat, g, view_id, attr_list(body), position);
    } else if (op == "hide") {
      change = view::hide(cat, g, view_id, attr_list(body));
    } else if (op == "sort") {
      std::optional<view::SortSpec> spec;
      if (body.contains("sort")) spec = view::sort_from_json(body["sort"]);
      else if (body.contains("attr") && !body["attr"].is_null()) spec = view::sort_from_json(body);
      change = view::set_sort(cat, g, view_id, spec);
    } else if (op == "filter") {
      change = view::add_filter(cat, g, view_id, filter_field(cat, g, g.node(view_id), body));
    } else if (op == "remove_filter") {
      const auto& index = field(body, "index");
      if (!is_non_negative_integer(index)) bad_request("'index' must be a non-negative integer");
      change = view::remove_filter(cat, g, view_id, index.get<std::size_t>());
    } else if (op == "layout") {
      change = view::set_overview_layout(cat, g, view_id, view::layout_from_json(field(body, "layout")));
    } else if (op == "od_layout") {
      change = view::set_od_layout(cat, g, view_id, string_field(body, "detail"),
                                   enum_field<view::OverviewDetailLayout>(body, "layout", view::od_layout_from_string));
    } else if (op == "detail_multiplicity") {
      change = view::set_detail_multiplicity(
          cat, g, view_id, enum_field<view::DetailMultiplicity>(body, "mode", view::multiplicity_from_string));
    } else if (op == "rename") {
      change = view::rename_overview(cat, g, view_id, string_field(body, "title"));
    } else {
      bad_request("unknown op '" + op + "'");
    }
    auto m = from_change(std::move(change));
    m.respond = [this, view_id](const Snapshot& next, const std::vector<journal::CustomizationEvent>& events) {
      auto payload = view_payload(next, view_id, {});
      payload["events"] = events_json(events);
      payload["view"] = view::node_to_json(next.graph.node(view_id));
      return payload;
    };
    return m;
  });
}

json Service::add_overview(const std::string& session_id, const json& body) {
  return mutate(session_id, body, [&](const Snapshot& snap) {
    std::string collection;
    if (body.contains("collection")) {
      collection = string_field(body, "collection");
    } else {
      const auto overviews = snap.graph.overview_ids();
      if (overviews.empty()) bad_request("'collection' is required");
      collection = snap.graph.node(overviews.front()).collection_id;
    }
    view::AddOverviewOptions options;
    if (body.contains("empty_start")) options.empty_start = field(body, "empty_start").get<bool>();
    if (body.contains("layout") && !body["layout"].is_null()) options.layout = view::layout_from_json(body["layout"]);
    auto added = view::add_overview(*catalog_, snap.graph, collection, string_field(body, "title"), options);
    auto m = from_change(std::move(added.change));
    m.respond = [this, id = added.view_id](const Snapshot& next,
                                             const std::vector<journal::CustomizationEvent>& events) {
      auto payload = view_payload(next, id, {});
      payload["events"] = events_json(events);
      payload["view"] = view::node_to_json(next.graph.node(id));
      return payload;
    };
    return m;
  });
}

json Service::remove_overview(const std::string& session_id, const std::string& view_id, const json& body) {
  return mutate(session_id, body, [&](const Snapshot& snap) {
    auto m = from_change(view::remove_overview(*catalog_, snap.graph, view_id));
    auto detail = snap.detail;
    detail.open.erase(view_id);
    m.detail = std::move(detail);
    m.respond = [](const Snapshot& next, const std::vector<journal::CustomizationEvent>& events) {
      return json{{"seq", next.seq}, {"events", events_json(events)}, {"overviews", next.graph.overview_ids()}};
    };
    return m;
  });
}

json Service::move_item(const std::string& session_id, const json& body) {
  return mutate(session_id, body, [&](const Snapshot& snap) {
    const auto from = string_field(body, "from");
    const auto to = string_field(body, "to");
    auto m = from_change(view::move_item(*catalog_, snap.graph, from, to, string_field(body, "item")));
    m.respond = [from, to](const Snapshot& next, const std::vector<journal::CustomizationEvent>& events) {
      return json{{"seq", next.seq},
                  {"events", events_json(events)},
                  {"from", view::node_to_json(next.graph.node(from))},
                  {"to", view::node_to_json(next.graph.node(to))}};
    };
    return m;
  });
}

json Service::open_detail(const std::string& session_id, const std::string& overview_id, const json& body) {
  return mutate(session_id, body, [&](const Snapshot& snap) {
    const auto item = string_field(body, "item");
    Mutation m;
    m.graph = snap.graph;
    m.detail = view::open_detail(*catalog_, snap.graph, snap.detail, overview_id, item);
    const auto* detail = snap.graph.detail_for(overview_id);
    m.respond = [this, overview_id, item, detail_id = detail ? detail->view_id : std::string()](
                    const Snapshot& next, const std::vector<journal::CustomizationEvent>&) {
      json out{{"seq", next.seq}, {"overview", overview_id}, {"open", next.detail.open_for(overview_id)}};
      if (!detail_id.empty()) {
        const auto& node = next.graph.node(detail_id);
        const auto collection = view::effective_collection(*catalog_, next.graph, node.collection_id);
        out["detail"] = detail_id;
        out["row"] = row_json(query::materialize_detail(node, collection, item), false, options_.overview_text_budget);
      }
      return out;
    };
    return m;
  });
}

json Service::close_detail(const std::string& session_id, const std::string& overview_id, const json& body) {
  return mutate(session_id, body, [&](const Snapshot& snap) {
    snap.graph.node(overview_id);
    Mutation m;
    m.graph = snap.graph;
    m.detail = view::close_detail(snap.detail, overview_id, string_field(body, "item"));
    m.respond = [overview_id](const Snapshot& next, const std::vector<journal::CustomizationEvent>&) {
      return json{{"seq", next.seq}, {"overview", overview_id}, {"open", next.detail.open_for(overview_id)}};
    };
    return m;
  });
}

json Service::prompt(const std::string& session_id, const std::string& view_id, const json& body) {
  const auto text = string_field(body, "prompt");
  const std::string mode = body.contains("mode") ? string_field(body, "mode") : "attribute";
  if (mode != "attribute" && mode != "filter" && mode != "transform" && mode != "autofill") {
    bad_request("unknown prompt mode '" + mode + "'");
  }
  return mutate(session_id, body, [&](const Snapshot& snap) {
    const auto& node = snap.graph.node(view_id);
    const auto collection = view::effective_collection(*catalog_, snap.graph, node.collection_id);
    const synthesis::Synthesizer synthesizer(*provider_, options_.synthesis);

    view::SynthesisRecord record{view_id, text, mode, {}, {}, std::nullopt};
    std::map<model::ItemId, std::string> failures;
    bool created = false;
    std::vector<std::string> attrs;
    auto keep = [&](const synthesis::SynthesisOutcome& outcome) {
      record.created.push_back({node.collection_id, outcome.descriptor, outcome.values});
      failures.insert(outcome.failures.begin(), outcome.failures.end());
    };

    if (mode == "attribute" || mode == "filter") {
      const auto resolution = synthesizer.resolve(collection, text);
      created = resolution.created;
      std::vector<model::AttributeDescriptor> resolved = resolution.descriptors;
      if (resolution.created) {
        std::vector<model::ItemId> ids;
        for (const auto& item : collection.items()) ids.push_back(item.item_id);
        auto outcome = synthesizer.generate_values(collection, resolved.front(), ids);
        resolved.front() = outcome.descriptor;
        keep(outcome);
      }
      for (const auto& d : resolved) attrs.push_back(d.id);
      if (mode == "attribute") {
        record.surface = attrs;
      } else {
        const auto& target = resolved.front();
        if (target.value_kind != model::ValueKind::boolean) {
          bad_request("prompt resolved to '" + target.display_name + "', which is not a yes/no attribute");
        }
        record.filter = view::FilterSpec{target.id, view::Predicate::is_true()};
        record.surface = {target.id};
      }
    } else {
      const auto attr = string_field(body, "attr");
      const auto* descriptor = view::find_descriptor(*catalog_, snap.graph, node.collection_id, attr);
      if (!descriptor) throw Error(ErrorCode::unknown_attribute, "unknown attribute '" + attr + "'");
      if (mode == "transform") {
        std::vector<model::ItemId> ids;
        for (const auto* item : query::candidate_items(node, collection)) ids.push_back(item->item_id);
        auto outcome = synthesizer.transform_values(collection, attr, text, ids);
        created = true;
        attrs.push_back(outcome.descriptor.id);
        record.surface = {outcome.descriptor.id};
        keep(outcome);
      } else {
        auto outcome = synthesizer.autofill_missing(collection, attr);
        attrs.push_back(attr);
        if (std::find(node.surfaced.begin(), node.surfaced.end(), attr) == node.surfaced.end()) {
          record.surface = {attr};
        }
        if (!outcome.values.empty()) keep(outcome);
      }
    }

    auto m = from_change(view::apply_synthesis(*catalog_, snap.graph, record));
    m.respond = [this, view_id, created, attrs, failures, mode](
                    const Snapshot& next, const std::vector<journal::CustomizationEvent>& events) {
      auto payload = view_payload(next, view_id, {});
      payload["events"] = events_json(events);
      payload["view"] = view::node_to_json(next.graph.node(view_id));
      payload["mode"] = mode;
      payload["resolution"] = {{"created", created}, {"attrs", attrs}};
      payload["failures"] = failures;
      return payload;
    };
    return m;
  });
}

std::string Service::log_ndjson(const std::string& session_id) const {
  std::string out;
  for (const auto& event : session(session_id)->log().events()) {
    out += journal::event_to_json(event).dump();
    out += '\n';
  }
  return out;
}

journal::SessionAnalytics Service::analytics(const std::string& session_id, std::optional<std::int64_t> start_ms,
                                             std::optional<std::int64_t> end_ms) const {
  auto s = session(session_id);
  const auto events = s->log().events();
  return journal::analyze(events, {start_ms.value_or(s->created_at_ms()), end_ms});
}

journal::InteractionMatrix Service::matrix() const {
  std::vector<journal::SessionMatrixInput> inputs;
  for (const auto& id : session_ids()) {
    try {
      inputs.push_back({id, analytics(id, std::nullopt, std::nullopt)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::empty_window) throw;
    }
  }
  if (inputs.empty()) throw Error(ErrorCode::empty_window, "no session has logged activity yet");
  return journal::export_matrix(inputs);
}

}  // namespace malleable::service

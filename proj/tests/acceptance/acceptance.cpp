// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "generators.hpp"
#include "httplib.h"
#include "malleable/error.hpp"
#include "malleable/journal/analytics.hpp"
#include "malleable/journal/event.hpp"
#include "malleable/model/derive.hpp"
#include "malleable/query/compare.hpp"
#include "malleable/query/materialize.hpp"
#include "malleable/query/suggest.hpp"
#include "malleable/service/server.hpp"
#include "malleable/service/service.hpp"
#include "malleable/synthesis/bracket.hpp"
#include "malleable/synthesis/mock_provider.hpp"
#include "malleable/synthesis/templates.hpp"
#include "malleable/view/operations.hpp"
#include "malleable/view/serialize.hpp"
#include "oracles.hpp"

using namespace malleable;
using nlohmann::json;

namespace {

using Failure = std::optional<std::string>;

/// Thrown by expect() to abort a criterion with a reason.
struct Unmet {
  std::string reason;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Unmet{what};
}

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<void()> run;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Unmet{"cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

// Prompt templates and the worked examples.
void prompt_fidelity() {
  using synthesis::TemplateKind;
  const std::string dir = std::string(MALLEABLE_GOLDEN_DIR) + "/prompts/";
  for (auto kind : {TemplateKind::resolve_attribute, TemplateKind::generate_value, TemplateKind::transform_value}) {
    const auto name = std::string(synthesis::to_string(kind));
    expect(synthesis::template_text(kind) == read_file(dir + name + ".txt"), name + " template differs from golden");
  }

  using model::Decimal;
  using model::ValueKind;
  const model::Collection monitors(
      "monitors", "Monitors",
      {{"Title", "Title", ValueKind::text},
       {"Maximum Resolution", "Maximum Resolution", ValueKind::text},
       {"Item Height", "Item Height", ValueKind::number},
       {"Item Length", "Item Length", ValueKind::number}},
      {{"m1",
        {{"Title", model::Text{"UltraSharp 27"}},
         {"Item Height", model::Number{Decimal::parse("8.9")}},
         {"Item Length", model::Number{Decimal(4)}}}}});
  const auto ctx = synthesis::serialize_item_context(monitors.item("m1"));
  synthesis::MockProvider mock;

  const std::vector<std::pair<std::string, std::string>> resolve = {
      {"Is it 4k?", "Is 4k"},
      {"Multiply the item height with the length", "Item Height x Length"},
      {"At least how old is this monitor?", "Approximate Minimum Age"},
      {"What's the value of this monitor?", "Value"}};
  for (const auto& [prompt, want] : resolve) {
    const auto got = synthesis::parse_bracket(mock.resolve_name(prompt, ctx));
    expect(got == want, "resolve '" + prompt + "' gave '" + got + "'");
  }
  const std::vector<std::tuple<std::string, std::string, std::string>> generate = {
      {"Approximate Minimum Age", "At least how old is this monitor?", "At least 2 Years"},
      {"Value", "What's the value of this monitor?", "Medium Value"},
      {"Item Height x Length", "Multiply the item height with the length", "35.6"},
      {"Is 4k", "Is it 4k?", "Not Specified"}};
  for (const auto& [attr, prompt, want] : generate) {
    const auto got = synthesis::parse_bracket(mock.generate_value(attr, prompt, ctx));
    expect(got == want, "generate '" + attr + "' gave '" + got + "'");
  }
}

void sort_filter_oracle() {
  testing::Rng rng(20240001);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = testing::random_collection(rng, 100);
    view::ViewNode v;
    v.view_id = "v";
    v.collection_id = c.id();
    for (const auto& d : c.schema()) {
      if (std::bernoulli_distribution(0.6)(rng)) v.surfaced.push_back(d.id);
    }
    const auto& sort_attr = c.schema()[rng() % c.schema().size()].id;
    v.sort = view::SortSpec{sort_attr, rng() % 2 ? view::SortDirection::asc : view::SortDirection::desc};
    const int filters = static_cast<int>(rng() % 4);
    for (int f = 0; f < filters; ++f) {
      const auto& a = c.schema()[rng() % c.schema().size()].id;
      v.filters.push_back({a, testing::random_predicate(rng, c, a)});
    }
    expect(query::materialize(v, c) == testing::oracle::materialize(v, c),
           "corpus " + std::to_string(trial) + " differs from the oracle");
  }
}

void comparator_total_order() {
  testing::Rng rng(20240002);
  const std::vector<model::AttributeDescriptor> schema = {{"v", "v", model::ValueKind::text}};
  for (int i = 0; i < 10000; ++i) {
    const std::vector<model::AttributeValue> t = {testing::random_any_value(rng), testing::random_any_value(rng),
                                                  testing::random_any_value(rng)};
    const auto& [a, b, c] = std::tie(t[0], t[1], t[2]);
    expect(sign(query::compare(a, b)) == -sign(query::compare(b, a)), "antisymmetry failed");
    expect(sign(query::compare(a, b)) == testing::oracle::compare(a, b), "comparator disagrees with the oracle");
    if (query::compare(a, b) <= 0 && query::compare(b, c) <= 0) expect(query::compare(a, c) <= 0, "transitivity failed");
    if (query::compare(a, b) == 0 && query::compare(b, c) == 0) expect(query::compare(a, c) == 0, "tie not transitive");

    std::vector<model::Item> items;
    for (int k = 0; k < 3; ++k) items.push_back({"i" + std::to_string(k), {{"v", t[k]}}});
    const model::Collection collection("triple", "Triple", schema, items);
    for (auto dir : {view::SortDirection::asc, view::SortDirection::desc}) {
      view::ViewNode node;
      node.view_id = "v";
      node.collection_id = "triple";
      node.surfaced = {"v"};
      node.sort = view::SortSpec{"v", dir};
      bool seen_ns = false;
      for (const auto& row : query::materialize(node, collection)) {
        const bool ns = model::is_not_specified(row.cells.front().value);
        expect(!seen_ns || ns, "Not Specified sorted before a value");
        seen_ns = seen_ns || ns;
      }
    }
  }
}

bool disjoint(const view::ViewGraph& g) {
  for (const auto& n : g.nodes) {
    for (const auto& a : n.surfaced) {
      if (n.hidden.count(a)) return false;
    }
  }
  return true;
}

void event_sourcing() {
  testing::Rng rng(20240003);
  for (int trial = 0; trial < 1000; ++trial) {
    auto p = testing::make_playground(rng);
    auto live = p.graph;
    std::vector<journal::EventBody> log;
    const auto length = 1 + rng() % 200;
    for (std::size_t op = 0; op < length; ++op) {
      auto change = testing::random_operation(rng, p.catalog, live);
      if (!change) continue;
      for (auto& e : change->events) log.push_back(std::move(e));
      live = std::move(change->graph);
      expect(disjoint(live), "surfaced and hidden overlap in sequence " + std::to_string(trial));
    }
    expect(view::graph_hash(view::replay(p.graph, log)) == view::graph_hash(live),
           "replay hash differs in sequence " + std::to_string(trial));
  }
}

std::string cents_text(std::int64_t cents) {
  const bool negative = cents < 0;
  if (negative) cents = -cents;
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%s%lld.%02lld", negative ? "-" : "", static_cast<long long>(cents / 100),
                static_cast<long long>(cents % 100));
  return buffer;
}

void derived_total_cost() {
  using model::ValueKind;
  testing::Rng rng(20240004);
  std::vector<model::AttributeDescriptor> schema = {{"Price", "Price", ValueKind::money, "USD"},
                                                    {"Shipping Fee", "Shipping Fee", ValueKind::money, "USD"}};
  model::AttributeDescriptor total{"Total Cost", "Total Cost", ValueKind::money, "USD"};
  total.origin = model::Origin::derived;
  total.source_attributes = {"Price", "Shipping Fee"};
  total.prompt = "Price + Shipping Fee";
  schema.push_back(total);

  // Oracle sums in integer cents; nullopt means "Not Specified".
  std::map<std::string, std::optional<std::int64_t>> expected;
  std::vector<model::Item> items;
  std::size_t unspecified = 0;
  for (int i = 0; i < 50; ++i) {
    model::Item item{"item-" + std::to_string(i), {}};
    std::optional<std::int64_t> price = static_cast<std::int64_t>(rng() % 500000);
    std::optional<std::int64_t> fee = static_cast<std::int64_t>(rng() % 5000);
    if (i % 7 == 3) price.reset();
    if (i % 11 == 5) fee.reset();
    auto money = [](std::int64_t cents) {
      return model::Money{model::Decimal::parse(cents_text(cents)), "USD"};
    };
    if (price) item.values["Price"] = money(*price);
    if (fee) item.values["Shipping Fee"] = money(*fee);
    else if (i % 2) item.values["Shipping Fee"] = model::NotSpecified{};
    expected[item.item_id] = price && fee ? std::optional(*price + *fee) : std::nullopt;
    unspecified += !(price && fee);
    items.push_back(std::move(item));
  }
  expect(unspecified > 0, "fixture has no Not Specified source");
  const model::Collection collection("fees", "Fees", schema, items);
  const auto values = model::recompute_derived(collection, total, model::Combiner::sum);
  expect(values.size() == 50, "derived value missing for some items");
  for (const auto& [id, want] : expected) {
    const auto& got = values.at(id);
    if (!want) {
      expect(model::is_not_specified(got), id + " should be Not Specified");
      continue;
    }
    const auto* money = std::get_if<model::Money>(&got);
    expect(money != nullptr, id + " is not money");
    expect(money->currency == "USD", id + " lost its currency");
    expect(money->amount.to_fixed(2) == cents_text(*want), id + ": " + money->amount.to_fixed(2) + " != " +
                                                                 cents_text(*want));
  }
}

void suggestion_table() {
  using K = view::OverviewLayoutKind;
  using model::ValueKind;
  auto kinds = [](const std::vector<model::AttributeDescriptor>& attrs) {
    std::vector<K> out;
    const auto s = query::suggest_representations(attrs);
    for (std::size_t i = 0; i < s.size(); ++i) {
      expect(s[i].rank == i + 1, "ranks are not 1..n");
      out.push_back(s[i].layout.kind);
    }
    return out;
  };
  const auto scatter = query::suggest_representations(
      {{"Product Price", "Product Price", ValueKind::money}, {"Items Sold", "Items Sold", ValueKind::number}});
  expect(scatter.front().layout.binding == std::vector<std::string>{"Product Price", "Items Sold"},
         "scatter binding wrong");
  expect(kinds({{"Product Price", "Product Price", ValueKind::money}, {"Items Sold", "Items Sold", ValueKind::number}}) ==
             std::vector<K>{K::scatter, K::list, K::grid, K::table},
         "money+number list wrong");
  expect(kinds({{"Listing Date", "Listing Date", ValueKind::date}}) == std::vector<K>{K::timeline, K::list, K::grid, K::table},
         "date list wrong");
  expect(kinds({{"Color", "Color", ValueKind::color}}) == std::vector<K>{K::color_space, K::list, K::grid, K::table},
         "color list wrong");
  expect(kinds({{"Title", "Title", ValueKind::text}}) == std::vector<K>{K::list, K::grid, K::table},
         "text fallback wrong");
}

void analytics_fixtures() {
  using journal::Dimension;
  using journal::EventKind;
  const std::int64_t start = 1'700'000'000'000;
  const std::int64_t end = start + 20 * 60'000;

  // 36 ops, six of each kind below, every 30 s.
  auto session = [&](const std::string& id, bool with_hide) {
    std::vector<journal::CustomizationEvent> log;
    for (std::uint64_t i = 0; i < 36; ++i) {
      journal::EventBody body;
      switch (i % 6) {
        case 0:
          body.kind = with_hide && i == 30 ? EventKind::hide : EventKind::surface;
          body.attrs = {"A" + std::to_string((i / 6) % 4)};
          break;
        case 1: body.kind = EventKind::sort; body.attrs = {"Price"}; break;
        case 2: body.kind = EventKind::filter; body.attrs = {"Brand"}; break;
        case 3: body.kind = EventKind::add_overview; break;
        case 4: body.kind = EventKind::move_item; break;
        default: body.kind = EventKind::overview_layout; body.attrs = {"Price", "Score"}; break;
      }
      log.push_back({i + 1, start + static_cast<std::int64_t>(i + 1) * 30'000, id, std::move(body)});
    }
    return log;
  };

  const auto hoarder_log = session("h", false);
  const auto hoarder = journal::analyze(hoarder_log, {start, end});
  expect(hoarder.total_ops == 36, "total ops");
  expect(std::abs(hoarder.ops_per_minute.to_double() - 1.80) <= 0.005,
         "ops_per_minute " + hoarder.ops_per_minute.to_string());
  expect(hoarder.classification == journal::Classification::hoarder, "zero-hide log is not hoarder");
  // Content: A0..A3, Price, Brand. Composition: 6 add + 6 move. Layout: 6.
  expect(hoarder.per_dimension_counts.at(Dimension::content) == 6, "content count");
  expect(hoarder.per_dimension_counts.at(Dimension::composition) == 12, "composition count");
  expect(hoarder.per_dimension_counts.at(Dimension::layout) == 6, "layout count");

  const auto minimalist_log = session("m", true);
  const auto minimalist = journal::analyze(minimalist_log, {start, end});
  expect(minimalist.classification == journal::Classification::minimalist, "hide log is not minimalist");
  expect(minimalist.per_dimension_counts.at(Dimension::content) == 6, "content count with hide");

  std::vector<journal::CustomizationEvent> prompt_log;
  json created = json::array(
      {{{"collection", "shop"}, {"descriptor", {{"id", "Is Linen"}, {"origin", "synthesized"}}}, {"values", {}}}});
  prompt_log.push_back({1, start + 60'000, "p", {EventKind::surface, {{"view", "v"}}, {"Zeta"}}});
  prompt_log.push_back({2, start + 120'000, "p",
                        {EventKind::prompt_synthesis, {{"surface", {"Is Linen"}}, {"created", created}}, {"Is Linen"}}});
  const auto prompted = journal::analyze(prompt_log, {start, end});
  expect(prompted.synthesized_attrs == std::set<std::string>{"Is Linen"}, "synthesized attribute not detected");

  const std::vector<journal::SessionMatrixInput> inputs = {{"h", hoarder}, {"m", minimalist}, {"p", prompted}};
  const auto matrix = journal::export_matrix(inputs);
  expect(!matrix.rows.empty() && matrix.rows.back().attr == "Is Linen" && matrix.rows.back().synthesized,
         "synthesized attribute not in the trailing block");
  bool in_block = false;
  for (const auto& row : matrix.rows) {
    expect(!in_block || row.synthesized, "source attribute after the synthesized block");
    in_block = in_block || row.synthesized;
  }
}

// Scripted HTTP client against a live server.
void service_round_trip() {
  const std::string data = MALLEABLE_DATA_DIR;
  service::ServiceConfig config;
  config.corpus_paths = {data + "/shopping.json", data + "/booking.json"};
  config.provider.mock_rules = data + "/mock_rules.json";
  config.options.preset = "shopping-default";
  service::Service svc(config);
  service::HttpServer server(svc);
  const int port = server.start("127.0.0.1", 0);
  httplib::Client client("127.0.0.1", port);
  client.set_read_timeout(5, 0);

  auto call = [&](const std::string& method, const std::string& path, const json& body = nullptr) {
    httplib::Result res = method == "GET"     ? client.Get(path)
                          : method == "PATCH" ? client.Patch(path, body.dump(), "application/json")
                                              : client.Post(path, body.is_null() ? "{}" : body.dump(), "application/json");
    expect(static_cast<bool>(res), method + " " + path + ": no response");
    expect(res->status / 100 == 2, method + " " + path + " returned " + std::to_string(res->status) + ": " + res->body);
    return res->get_header_value("Content-Type") == "application/json" ? json::parse(res->body) : json(res->body);
  };

  const auto nine = std::vector<std::string>{"Title",
                                             "Thumbnail Image",
                                             "Vendor Username",
                                             "Vendor Feedback Score",
                                             "Vendor Feedback Percentage",
                                             "Product Price",
                                             "Product Condition",
                                             "Number of Products Sold",
                                             "Add to Cart"};
  bool found = false;
  for (const auto& corpus : call("GET", "/corpora")) {
    if (corpus["collection_id"] == "shopping") {
      found = true;
      expect(corpus["default_surfaced"].get<std::vector<std::string>>() == nine, "shopping defaults differ");
    }
  }
  expect(found, "shopping corpus not served");

  const auto created = call("POST", "/sessions");
  const auto id = created["session_id"].get<std::string>();
  const auto base = "/sessions/" + id;
  const auto initial = view::graph_from_json(created["graph"]);
  expect(initial.node("search-results").surfaced == nine, "session does not start with the nine defaults");

  struct Step {
    std::string method;
    std::string path;
    json body;
    std::function<void(const view::ViewGraph&, const json&)> visible;
  };
  std::string added_view;
  const std::vector<Step> script = {
      {"PATCH", base + "/views/search-results", {{"op", "surface"}, {"attr", "Brand"}},
       [](const view::ViewGraph& g, const json&) {
         expect(g.node("search-results").surfaced.back() == "Brand", "surface not visible");
       }},
      {"PATCH", base + "/views/search-results",
       {{"op", "sort"}, {"sort", {{"attr", "Product Price"}, {"direction", "desc"}}}},
       [](const view::ViewGraph& g, const json&) {
         expect(g.node("search-results").sort == view::SortSpec{"Product Price", view::SortDirection::desc},
                "sort not visible");
       }},
      {"PATCH", base + "/views/search-results",
       {{"op", "filter"},
        {"filter", {{"attr", "Product Price"},
                    {"predicate", {{"op", "range"}, {"lo", {{"amount", "100"}, {"currency", "USD"}}}}}}}},
       [](const view::ViewGraph& g, const json& rows) {
         expect(g.node("search-results").filters.size() == 1, "filter not visible");
         expect(rows["total"] == 26, "filtered rows " + rows["total"].dump());
       }},
      {"POST", base + "/overviews", {{"title", "Comparison"}},
       [&](const view::ViewGraph& g, const json&) {
         const auto ids = g.overview_ids();
         expect(ids.size() == 3, "added overview not visible");
         added_view = ids.back();
         expect(g.node(added_view).title == "Comparison", "added overview has the wrong title");
       }},
      {"PATCH", "", {{"op", "layout"}, {"layout", {{"kind", "scatter"}, {"binding", {"Product Price", "Shipping Fee"}}}}},
       [&](const view::ViewGraph& g, const json&) {
         expect(g.node(added_view).layout.kind == view::OverviewLayoutKind::scatter, "layout not visible");
       }},
      {"POST", base + "/views/search-results/prompt", {{"prompt", "Is it made of linen?"}},
       [](const view::ViewGraph& g, const json& rows) {
         const auto& surfaced = g.node("search-results").surfaced;
         expect(std::find(surfaced.begin(), surfaced.end(), "Is Linen") != surfaced.end(), "prompt not visible");
         expect(!g.synthesized.empty() && g.synthesized.back().descriptor.id == "Is Linen",
                "synthesized attribute missing from the graph");
         bool shown = false;
         for (const auto& attr : rows["attributes"]) shown = shown || attr["id"] == "Is Linen";
         expect(shown, "synthesized attribute missing from rows");
       }},
  };

  std::uint64_t logged = 0;
  std::uint64_t client_seq = 0;
  for (const auto& step : script) {
    auto body = step.body;
    body["client_seq"] = ++client_seq;
    const auto path = step.path.empty() ? base + "/views/" + added_view : step.path;
    const auto response = call(step.method, path, body);
    const auto seq = response["seq"].get<std::uint64_t>();
    const auto events = response["events"].size();
    expect(events >= 1, path + " logged nothing");

    const auto graph = call("GET", base + "/graph");
    expect(graph["seq"] == seq, "GET graph is behind the mutation");
    const auto rows = call("GET", base + "/views/search-results/rows?page_size=100");
    step.visible(view::graph_from_json(graph["graph"]), rows);

    const auto log = call("GET", base + "/log").get<std::string>();
    std::vector<journal::CustomizationEvent> lines;
    std::istringstream in(log);
    for (std::string line; std::getline(in, line);) lines.push_back(journal::event_from_json(json::parse(line)));
    expect(lines.size() == logged + events, path + " not logged exactly once");
    for (std::size_t i = 0; i < lines.size(); ++i) expect(lines[i].seq == i + 1, "log seq is not consecutive");
    for (const auto& e : response["events"]) {
      expect(journal::event_to_json(lines.at(e["seq"].get<std::size_t>() - 1)) == e, "logged event differs");
    }
    logged += events;

    const auto again = call(step.method, path, body);
    expect(again.value("replayed", false), path + " replay not flagged");
    expect(again["seq"] == seq, path + " replay changed seq");
    expect(call("GET", base + "/graph")["graph"] == graph["graph"], path + " replay changed the graph");
    const auto after = call("GET", base + "/log").get<std::string>();
    expect(after == log, path + " replay was logged again");
  }

  std::vector<journal::CustomizationEvent> all;
  std::istringstream in(call("GET", base + "/log").get<std::string>());
  for (std::string line; std::getline(in, line);) all.push_back(journal::event_from_json(json::parse(line)));
  const auto replayed = view::replay(initial, all);
  expect(view::graph_hash(replayed) == view::graph_hash(view::graph_from_json(call("GET", base + "/graph")["graph"])),
         "log does not replay to the served graph");
  server.stop();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"prompt-fidelity", 1.0, prompt_fidelity},
      {"sort-filter-oracle", 30.0, sort_filter_oracle},
      {"comparator-total-order", 10.0, comparator_total_order},
      {"event-sourcing-determinism", 30.0, event_sourcing},
      {"derived-total-cost", 1.0, derived_total_cost},
      {"representation-suggestions", 1.0, suggestion_table},
      {"analytics-fixtures", 1.0, analytics_fixtures},
      {"service-round-trip", 10.0, service_round_trip},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Failure failure;
    try {
      c.run();
    } catch (const Unmet& u) {
      failure = u.reason;
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!failure && seconds > c.limit_seconds) {
      failure = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    }
    std::printf("%s %-28s %8.3f s (limit %.0f s)%s%s\n", failure ? "FAIL" : "PASS", c.name.c_str(), seconds,
                c.limit_seconds, failure ? "  " : "", failure ? failure->c_str() : "");
    failures += failure ? 1 : 0;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

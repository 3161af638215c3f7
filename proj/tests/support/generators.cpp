#include "generators.hpp"

#include <algorithm>

#include "malleable/error.hpp"
#include "malleable/query/materialize.hpp"

namespace malleable::testing {

using namespace model;

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& options) {
  return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

const std::vector<ValueKind> kKinds = {ValueKind::text,      ValueKind::number,        ValueKind::money,
                                       ValueKind::boolean,   ValueKind::date,          ValueKind::image_ref,
                                       ValueKind::component_ref, ValueKind::color};

}  // namespace

AttributeValue random_value(Rng& rng, ValueKind kind) {
  switch (kind) {
    case ValueKind::text: {
      static const std::vector<std::string> words = {"linen", "Linen", "oak", "Oak", "velvet", "walnut", "a", "A",
                                                     "",      "zeta",  "Zeta", "canon lens", "Canon Lens", "b2"};
      return Text{pick(rng, words)};
    }
    case ValueKind::number:
      return Number{Decimal(uniform(rng, -500, 500), -uniform(rng, 0, 2))};
    case ValueKind::money: {
      static const std::vector<std::string> currencies = {"USD", "USD", "USD", "EUR", "JPY"};
      return Money{Decimal(uniform(rng, 0, 5000), -2), pick(rng, currencies)};
    }
    case ValueKind::boolean:
      return Boolean{chance(rng, 0.5)};
    case ValueKind::date: {
      static const std::vector<std::string> dates = {"2024-01-05", "2024-01-05T00:00:00Z", "2024-03-10",
                                                     "2023-12-31", "2024-03-10T12:30:00+02:00", "2025-07-01"};
      return *Date::parse(pick(rng, dates));
    }
    case ValueKind::image_ref: {
      std::vector<std::string> uris;
      const int n = uniform(rng, 0, 3);
      for (int i = 0; i < n; ++i) uris.push_back("img/" + std::to_string(uniform(rng, 0, 3)) + ".jpg");
      return ImageRef{uris};
    }
    case ValueKind::component_ref: {
      static const std::vector<std::string> kinds = {"button", "toggle"};
      const int shape = uniform(rng, 0, 2);
      nlohmann::json state = shape == 0 ? nlohmann::json(chance(rng, 0.5))
                             : shape == 1 ? nlohmann::json{{"active", chance(rng, 0.5)}}
                                          : nlohmann::json{{"count", uniform(rng, 0, 2)}};
      return ComponentRef{pick(rng, kinds), state};
    }
    case ValueKind::color:
      return Color{static_cast<std::uint8_t>(uniform(rng, 0, 3) * 85), static_cast<std::uint8_t>(uniform(rng, 0, 1) * 255),
                   static_cast<std::uint8_t>(uniform(rng, 0, 2) * 127)};
  }
  return NotSpecified{};
}

AttributeValue random_any_value(Rng& rng) {
  if (chance(rng, 0.12)) return NotSpecified{};
  return random_value(rng, pick(rng, kKinds));
}

Collection random_collection(Rng& rng, std::size_t max_items, const std::string& id) {
  std::vector<AttributeDescriptor> schema;
  const int attrs = uniform(rng, 2, 6);
  for (int a = 0; a < attrs; ++a) {
    AttributeDescriptor d;
    d.id = "a" + std::to_string(a);
    d.display_name = "Attr " + std::to_string(a);
    d.value_kind = pick(rng, kKinds);
    schema.push_back(d);
  }
  AttributeDescriptor mixed;
  mixed.id = "mixed";
  mixed.display_name = "Mixed";
  schema.push_back(mixed);

  const auto count = std::uniform_int_distribution<std::size_t>(0, max_items)(rng);
  std::vector<Item> items;
  for (std::size_t i = 0; i < count; ++i) {
    Item item;
    item.item_id = "item-" + std::to_string(i);
    for (const auto& d : schema) {
      // About 20% NotSpecified overall, half of it as an absent key.
      if (chance(rng, 0.2)) {
        if (chance(rng, 0.5)) item.values[d.id] = NotSpecified{};
        continue;
      }
      item.values[d.id] = d.id == "mixed" ? random_value(rng, pick(rng, kKinds)) : random_value(rng, d.value_kind);
    }
    items.push_back(std::move(item));
  }
  // Guarantee the 10% floor even for tiny corpora.
  for (const auto& d : schema) {
    const auto missing = std::count_if(items.begin(), items.end(), [&](const Item& it) {
      auto v = it.values.find(d.id);
      return v == it.values.end() || is_not_specified(v->second);
    });
    for (std::size_t i = 0; static_cast<double>(missing) + static_cast<double>(i) < 0.1 * static_cast<double>(items.size()); ++i) {
      items[i].values.erase(d.id);
    }
  }
  return Collection(id, "Random", std::move(schema), std::move(items));
}

view::Predicate random_predicate(Rng& rng, const Collection& collection, const AttributeId& attr, int depth) {
  const auto& d = collection.attribute(attr);
  const int choice = uniform(rng, 0, depth < 2 ? 5 : 4);
  switch (choice) {
    case 0: {
      // Prefer a value that occurs in the corpus.
      if (!collection.items().empty() && chance(rng, 0.7)) {
        const auto& item = pick(rng, collection.items());
        return view::Predicate::equals(collection.get_value(item, attr));
      }
      return view::Predicate::equals(random_value(rng, d.value_kind));
    }
    case 1: {
      static const std::vector<std::string> needles = {"lin", "OAK", "a", "$", "yes", "no", "img", "#"};
      return view::Predicate::contains(pick(rng, needles));
    }
    case 2: {
      const auto kind = d.value_kind == ValueKind::number || d.value_kind == ValueKind::money ||
                                d.value_kind == ValueKind::date
                            ? d.value_kind
                            : pick(rng, std::vector<ValueKind>{ValueKind::number, ValueKind::money, ValueKind::date});
      std::optional<AttributeValue> lo, hi;
      if (chance(rng, 0.7)) lo = random_value(rng, kind);
      if (chance(rng, 0.7)) hi = random_value(rng, kind);
      return view::Predicate::range(lo, hi);
    }
    case 3:
      return view::Predicate::is_true();
    case 4:
      return view::Predicate::is_not_specified();
    default:
      return view::Predicate::negate(random_predicate(rng, collection, attr, depth + 1));
  }
}

Playground make_playground(Rng& rng) {
  std::vector<AttributeDescriptor> schema;
  auto add = [&](std::string id, ValueKind kind) {
    AttributeDescriptor d;
    d.id = id;
    d.display_name = std::move(id);
    d.value_kind = kind;
    schema.push_back(std::move(d));
  };
  add("Title", ValueKind::text);
  add("Price", ValueKind::money);
  add("Shipping Fee", ValueKind::money);
  add("Score", ValueKind::number);
  add("Watchers", ValueKind::number);
  add("Listed", ValueKind::date);
  add("Color", ValueKind::color);
  add("Returns", ValueKind::boolean);
  add("Photos", ValueKind::image_ref);
  add("Latitude", ValueKind::number);
  add("Longitude", ValueKind::number);
  std::vector<Item> items;
  for (int i = 0; i < 12; ++i) {
    Item item;
    item.item_id = "p" + std::to_string(i);
    for (const auto& d : schema) {
      if (!chance(rng, 0.15)) item.values[d.id] = random_value(rng, d.value_kind);
    }
    items.push_back(std::move(item));
  }
  Playground p;
  p.catalog.add(Collection("shop", "Shop", schema, items), {"Title", "Price", "Score"});

  view::ViewNode base;
  base.view_id = "results";
  base.collection_id = "shop";
  base.title = "Results";
  base.surfaced = {"Title", "Price", "Score"};
  view::add_view(p.catalog, p.graph, base);
  view::ViewNode cart = base;
  cart.view_id = "cart";
  cart.title = "Cart";
  cart.members = std::vector<ItemId>{"p1", "p2"};
  view::add_view(p.catalog, p.graph, cart);
  view::ViewNode detail;
  detail.view_id = "detail";
  detail.role = view::Role::detail;
  detail.collection_id = "shop";
  view::add_view(p.catalog, p.graph, detail);
  view::add_link(p.graph, {"results", "detail", view::OverviewDetailLayout::side_by_side});
  view::add_link(p.graph, {"cart", "detail", view::OverviewDetailLayout::side_by_side});
  return p;
}

std::optional<view::Change> random_operation(Rng& rng, const view::Catalog& catalog, const view::ViewGraph& graph) {
  const auto& base = catalog.collection("shop");
  std::vector<std::string> attrs;
  for (const auto& d : base.schema()) attrs.push_back(d.id);
  for (const auto& s : graph.synthesized) attrs.push_back(s.descriptor.id);
  std::vector<std::string> views;
  for (const auto& n : graph.nodes) views.push_back(n.view_id);
  const auto overviews = graph.overview_ids();
  const auto& any_view = pick(rng, views);
  const auto& overview = pick(rng, overviews);

  try {
    switch (uniform(rng, 0, 13)) {
      case 0:
      case 1: {
        std::vector<std::string> chosen{pick(rng, attrs)};
        if (chance(rng, 0.3)) chosen.push_back(pick(rng, attrs));
        std::optional<std::size_t> position;
        if (chance(rng, 0.3)) position = static_cast<std::size_t>(uniform(rng, 0, 5));
        return view::surface(catalog, graph, any_view, chosen, position);
      }
      case 2:
      case 3: {
        std::vector<std::string> chosen{pick(rng, attrs)};
        if (chance(rng, 0.3)) chosen.push_back(pick(rng, attrs));
        return view::hide(catalog, graph, any_view, chosen);
      }
      case 4: {
        std::optional<view::SortSpec> spec;
        if (chance(rng, 0.8)) {
          spec = view::SortSpec{pick(rng, attrs), chance(rng, 0.5) ? view::SortDirection::asc : view::SortDirection::desc};
        }
        return view::set_sort(catalog, graph, overview, spec);
      }
      case 5: {
        const auto effective = view::effective_collection(catalog, graph, "shop");
        const auto attr = pick(rng, attrs);
        return view::add_filter(catalog, graph, overview, {attr, random_predicate(rng, effective, attr)});
      }
      case 6: {
        const auto& node = graph.node(overview);
        return view::remove_filter(catalog, graph, overview,
                                   static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(node.filters.size()))));
      }
      case 7: {
        view::AddOverviewOptions options;
        options.empty_start = chance(rng, 0.3);
        return view::add_overview(catalog, graph, "shop", "Tab " + std::to_string(uniform(rng, 0, 99)), options).change;
      }
      case 8:
        return view::remove_overview(catalog, graph, overview);
      case 9:
        return view::rename_overview(catalog, graph, overview, "Renamed " + std::to_string(uniform(rng, 0, 9)));
      case 10: {
        const auto& to = pick(rng, overviews);
        const auto& item = pick(rng, base.items());
        return view::move_item(catalog, graph, overview, to, item.item_id);
      }
      case 11: {
        static const std::vector<view::OverviewLayout> layouts = {
            {view::OverviewLayoutKind::list, {}},
            {view::OverviewLayoutKind::grid, {}},
            {view::OverviewLayoutKind::table, {}},
            {view::OverviewLayoutKind::scatter, {"Price", "Score"}},
            {view::OverviewLayoutKind::scatter, {"Title", "Score"}},
            {view::OverviewLayoutKind::timeline, {"Listed"}},
            {view::OverviewLayoutKind::color_space, {"Color"}},
            {view::OverviewLayoutKind::spatial_map, {"Latitude", "Longitude"}},
        };
        return view::set_overview_layout(catalog, graph, overview, pick(rng, layouts));
      }
      case 12: {
        if (chance(rng, 0.5)) {
          const auto* detail = graph.detail_for(overview);
          if (!detail) return std::nullopt;
          static const std::vector<view::OverviewDetailLayout> od = {
              view::OverviewDetailLayout::new_page, view::OverviewDetailLayout::side_by_side,
              view::OverviewDetailLayout::in_place_dropdown, view::OverviewDetailLayout::above_overview_popup};
          return view::set_od_layout(catalog, graph, overview, detail->view_id, pick(rng, od));
        }
        return view::set_detail_multiplicity(catalog, graph, "detail",
                                             chance(rng, 0.5) ? view::DetailMultiplicity::many_at_a_time
                                                              : view::DetailMultiplicity::one_at_a_time);
      }
      default: {
        view::SynthesisRecord record;
        record.view = overview;
        record.prompt = "prompt " + std::to_string(uniform(rng, 0, 9));
        record.mode = "attribute";
        view::SynthesizedAttribute created;
        created.collection_id = "shop";
        created.descriptor.id = "Synth " + std::to_string(uniform(rng, 0, 3));
        created.descriptor.display_name = created.descriptor.id;
        created.descriptor.value_kind = ValueKind::boolean;
        created.descriptor.origin = Origin::synthesized;
        created.descriptor.prompt = record.prompt;
        for (const auto& item : base.items()) {
          if (chance(rng, 0.8)) created.values[item.item_id] = Boolean{chance(rng, 0.5)};
        }
        record.surface = {created.descriptor.id};
        if (chance(rng, 0.3)) record.filter = view::FilterSpec{created.descriptor.id, view::Predicate::is_true()};
        record.created.push_back(std::move(created));
        return view::apply_synthesis(catalog, graph, record);
      }
    }
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace malleable::testing

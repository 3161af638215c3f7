#include "malleable/service/presets.hpp"

#include <algorithm>

#include "malleable/error.hpp"
#include "malleable/view/operations.hpp"

namespace malleable::service {

using view::Catalog;
using view::ViewGraph;
using view::ViewNode;

const std::vector<std::string> kShoppingDefaults = {
    "Title",         "Thumbnail Image", "Vendor Username",         "Vendor Feedback Score", "Vendor Feedback Percentage",
    "Product Price", "Product Condition", "Number of Products Sold", "Add to Cart"};

const std::vector<std::string> kBookingDefaults = {"Hotel Name", "Thumbnail Image", "Rating", "Price per Night"};

namespace {

constexpr std::string_view kShopping = "shopping";
constexpr std::string_view kBooking = "booking";

const model::Collection& require_corpus(const Catalog& catalog, std::string_view id, std::string_view preset) {
  const auto* collection = catalog.find(id);
  if (!collection) {
    throw Error(ErrorCode::configuration,
                "preset '" + std::string(preset) + "' needs the '" + std::string(id) + "' corpus");
  }
  return *collection;
}

ViewNode overview(std::string id, std::string_view collection, std::string title, std::vector<std::string> surfaced) {
  ViewNode node;
  node.view_id = std::move(id);
  node.role = view::Role::overview;
  node.collection_id = std::string(collection);
  node.title = std::move(title);
  node.surfaced = std::move(surfaced);
  return node;
}

ViewNode detail(std::string id, std::string_view collection, std::string title) {
  ViewNode node;
  node.view_id = std::move(id);
  node.role = view::Role::detail;
  node.collection_id = std::string(collection);
  node.title = std::move(title);
  node.multiplicity = view::DetailMultiplicity::one_at_a_time;
  return node;
}

ViewGraph shopping_default(const Catalog& catalog) {
  require_corpus(catalog, kShopping, "shopping-default");
  ViewGraph graph;
  auto results = overview("search-results", kShopping, "Search Results", kShoppingDefaults);
  view::add_view(catalog, graph, std::move(results));
  auto cart = overview("cart", kShopping, "Cart", kShoppingDefaults);
  cart.layout.kind = view::OverviewLayoutKind::grid;
  cart.members = std::vector<model::ItemId>{};
  view::add_view(catalog, graph, std::move(cart));
  view::add_view(catalog, graph, detail("item-detail", kShopping, "Item"));
  view::add_link(graph, {"search-results", "item-detail", view::OverviewDetailLayout::new_page});
  view::add_link(graph, {"cart", "item-detail", view::OverviewDetailLayout::new_page});
  return graph;
}

ViewGraph booking_default(const Catalog& catalog) {
  require_corpus(catalog, kBooking, "booking-default");
  ViewGraph graph;
  auto map = overview("map", kBooking, "Map", {"Rating"});
  map.layout = {view::OverviewLayoutKind::spatial_map, {"Latitude", "Longitude"}};
  view::add_view(catalog, graph, std::move(map));
  auto bookmarks = overview("bookmarks", kBooking, "Bookmarks", {"Hotel Name"});
  bookmarks.members = std::vector<model::ItemId>{};
  view::add_view(catalog, graph, std::move(bookmarks));
  view::add_view(catalog, graph, detail("hotel-detail", kBooking, "Hotel"));
  view::add_link(graph, {"map", "hotel-detail", view::OverviewDetailLayout::side_by_side});
  view::add_link(graph, {"bookmarks", "hotel-detail", view::OverviewDetailLayout::side_by_side});
  return graph;
}

ViewGraph generic_default(const Catalog& catalog) {
  if (catalog.empty()) throw Error(ErrorCode::configuration, "no corpus loaded");
  ViewGraph graph;
  for (const auto& id : catalog.ids()) {
    const auto& collection = catalog.collection(id);
    view::add_view(catalog, graph, overview(id + "-overview", id, collection.title(), catalog.default_surfaced(id)));
    view::add_view(catalog, graph, detail(id + "-detail", id, collection.title()));
    view::add_link(graph, {id + "-overview", id + "-detail", view::OverviewDetailLayout::new_page});
  }
  return graph;
}

bool fits(const model::Collection& collection, const std::vector<std::string>& attrs) {
  return std::all_of(attrs.begin(), attrs.end(), [&](const auto& a) { return collection.find_attribute(a); });
}

}  // namespace

std::vector<std::string> preset_names() { return {"shopping-default", "booking-default", "default"}; }

ViewGraph build_preset(const Catalog& catalog, std::string_view name) {
  ViewGraph graph;
  if (name == "shopping-default") graph = shopping_default(catalog);
  else if (name == "booking-default") graph = booking_default(catalog);
  else if (name == "default") graph = generic_default(catalog);
  else throw Error(ErrorCode::configuration, "unknown preset '" + std::string(name) + "'");
  view::validate_graph(catalog, graph);
  return graph;
}

std::vector<std::string> default_surfaced_for(const model::Collection& collection) {
  if (collection.id() == kShopping && fits(collection, kShoppingDefaults)) return kShoppingDefaults;
  if (collection.id() == kBooking && fits(collection, kBookingDefaults)) return kBookingDefaults;
  std::vector<std::string> defaults;
  for (const auto& d : collection.schema()) {
    if (defaults.size() == 4) break;
    defaults.push_back(d.id);
  }
  return defaults;
}

}  // namespace malleable::service

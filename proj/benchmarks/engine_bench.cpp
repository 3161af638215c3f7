#include <random>

#include <benchmark/benchmark.h>

#include "malleable/query/compare.hpp"
#include "malleable/query/materialize.hpp"
#include "malleable/view/operations.hpp"
#include "malleable/view/serialize.hpp"

using namespace malleable;

namespace {

model::Collection make_corpus(std::size_t n) {
  using model::ValueKind;
  std::mt19937_64 rng(7);
  std::vector<model::AttributeDescriptor> schema = {{"Title", "Title", ValueKind::text},
                                                    {"Price", "Price", ValueKind::money, "USD"},
                                                    {"Score", "Score", ValueKind::number}};
  std::vector<model::Item> items;
  for (std::size_t i = 0; i < n; ++i) {
    model::Item item{"i" + std::to_string(i), {}};
    item.values["Title"] = model::Text{"item " + std::to_string(rng() % 1000)};
    if (rng() % 10) item.values["Price"] = model::Money{model::Decimal(static_cast<std::int64_t>(rng() % 100000), -2), "USD"};
    item.values["Score"] = model::Number{model::Decimal(static_cast<std::int64_t>(rng() % 500))};
    items.push_back(std::move(item));
  }
  return model::Collection("bench", "Bench", schema, items);
}

view::ViewNode overview() {
  view::ViewNode node;
  node.view_id = "results";
  node.collection_id = "bench";
  node.surfaced = {"Title", "Price", "Score"};
  node.sort = view::SortSpec{"Price", view::SortDirection::desc};
  node.filters.push_back({"Score", view::Predicate::range(model::Number{model::Decimal(100)}, std::nullopt)});
  return node;
}

void BM_Compare(benchmark::State& state) {
  const auto corpus = make_corpus(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = corpus.items()[i % 1024].values.at("Title");
    const auto& b = corpus.items()[(i * 7 + 3) % 1024].values.at("Title");
    benchmark::DoNotOptimize(query::compare(a, b));
    ++i;
  }
}
BENCHMARK(BM_Compare);

void BM_Materialize(benchmark::State& state) {
  const auto corpus = make_corpus(static_cast<std::size_t>(state.range(0)));
  const auto node = overview();
  for (auto _ : state) benchmark::DoNotOptimize(query::materialize(node, corpus));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Materialize)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_Replay(benchmark::State& state) {
  view::Catalog catalog;
  catalog.add(make_corpus(64), {"Title", "Price"});
  view::ViewGraph initial;
  auto node = overview();
  node.role = view::Role::overview;
  node.surfaced = {"Title", "Price"};
  node.filters.clear();
  view::add_view(catalog, initial, node);
  std::vector<journal::EventBody> log;
  auto graph = initial;
  for (int64_t i = 0; i < state.range(0); ++i) {
    auto change = i % 2 ? view::hide(catalog, graph, "results", {"Score"})
                        : view::surface(catalog, graph, "results", {"Score"});
    for (auto& e : change.events) log.push_back(std::move(e));
    graph = std::move(change.graph);
  }
  for (auto _ : state) benchmark::DoNotOptimize(view::graph_hash(view::replay(initial, log)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Replay)->Arg(50)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();

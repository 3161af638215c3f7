#include "doctest.h"
#include "malleable/error.hpp"
#include "malleable/model/derive.hpp"

using namespace malleable;
using namespace malleable::model;

namespace {

AttributeValue usd(const char* amount) { return Money{Decimal::parse(amount), "USD"}; }
AttributeValue num(const char* value) { return Number{Decimal::parse(value)}; }

AttributeDescriptor derived(std::vector<AttributeId> sources) {
  AttributeDescriptor d{"Derived", "Derived", ValueKind::number};
  d.origin = Origin::derived;
  d.source_attributes = std::move(sources);
  d.prompt = "combine";
  return d;
}

}  // namespace

TEST_SUITE("derive") {
  TEST_CASE("sum") {
    CHECK(combine(Combiner::sum, {usd("35.00"), usd("4.99")}) == usd("39.99"));
    CHECK(combine(Combiner::sum, {num("1"), num("2.5")}) == num("3.5"));
    CHECK(is_not_specified(combine(Combiner::sum, {usd("35.00"), NotSpecified{}})));
    CHECK(is_not_specified(combine(Combiner::sum, {usd("1"), Money{Decimal(1), "EUR"}})));
    CHECK(is_not_specified(combine(Combiner::sum, {usd("1"), num("1")})));
    CHECK(is_not_specified(combine(Combiner::sum, {Text{"a"}, Text{"b"}})));
  }

  TEST_CASE("product") {
    CHECK(combine(Combiner::product, {num("8.9"), num("4")}) == num("35.6"));
    CHECK(combine(Combiner::product, {usd("2.50"), num("3")}) == usd("7.5"));
    CHECK(is_not_specified(combine(Combiner::product, {usd("2"), usd("3")})));
  }

  TEST_CASE("ratio") {
    const AttributeValue density = combine(Combiner::ratio, {num("3840"), num("27")});
    REQUIRE(std::holds_alternative<Number>(density));
    // 3840 / 27 = 142.2222...
    CHECK(std::get<Number>(density).value.round_significant(6) == Decimal::parse("142.222"));
    CHECK(combine(Combiner::ratio, {usd("10"), usd("4")}) == num("2.5"));
    CHECK(combine(Combiner::ratio, {usd("10"), num("4")}) == usd("2.5"));
    CHECK(is_not_specified(combine(Combiner::ratio, {num("1"), num("0")})));
    CHECK(is_not_specified(combine(Combiner::ratio, {num("1"), usd("2")})));
    CHECK(is_not_specified(combine(Combiner::ratio, {num("1")})));
  }

  TEST_CASE("concat renders canonically") {
    CHECK(combine(Combiner::concat, {Text{"Acme"}, usd("3"), Boolean{true}}) == AttributeValue{Text{"Acme $3.00 Yes"}});
  }

  TEST_CASE("recompute over a collection") {
    Collection c("c", "t",
                 {{"Price", "Price", ValueKind::money}, {"Shipping Fee", "Shipping Fee", ValueKind::money}},
                 {{"a", {{"Price", usd("35.00")}, {"Shipping Fee", usd("4.99")}}},
                  {"b", {{"Price", usd("10")}}},
                  {"c", {}}});
    const auto values = recompute_derived(c, derived({"Price", "Shipping Fee"}), Combiner::sum);
    REQUIRE(values.size() == 3);
    CHECK(values.at("a") == usd("39.99"));
    CHECK(is_not_specified(values.at("b")));
    CHECK(is_not_specified(values.at("c")));

    AttributeDescriptor source{"Price", "Price", ValueKind::money};
    CHECK_THROWS_AS(recompute_derived(c, source, Combiner::sum), Error);
    try {
      recompute_derived(c, derived({"Price", "Tax"}), Combiner::sum);
      FAIL("unknown source accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::unknown_source_attribute);
    }
    CHECK_THROWS_AS(recompute_derived(c, derived({"Price"}), Combiner::ratio), Error);
  }

  TEST_CASE("combiner names") {
    for (auto k : {Combiner::sum, Combiner::product, Combiner::ratio, Combiner::concat}) {
      CHECK(combiner_from_string(to_string(k)) == k);
    }
    CHECK_FALSE(combiner_from_string("mean"));
  }
}

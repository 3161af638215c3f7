#include "malleable/model/derive.hpp"

#include "malleable/error.hpp"
#include "malleable/query/render.hpp"

namespace malleable::model {
namespace {

AttributeValue sum(const std::vector<AttributeValue>& sources) {
  if (std::holds_alternative<Number>(sources.front())) {
    Decimal total(0);
    for (const auto& v : sources) {
      const auto* n = std::get_if<Number>(&v);
      if (!n) return NotSpecified{};
      total = total + n->value;
    }
    return Number{total};
  }
  if (const auto* first = std::get_if<Money>(&sources.front())) {
    Decimal total(0);
    for (const auto& v : sources) {
      const auto* m = std::get_if<Money>(&v);
      if (!m || m->currency != first->currency) return NotSpecified{};
      total = total + m->amount;
    }
    return Money{total, first->currency};
  }
  return NotSpecified{};
}

AttributeValue product(const std::vector<AttributeValue>& sources) {
  Decimal total(1);
  std::optional<std::string> currency;
  for (const auto& v : sources) {
    if (const auto* n = std::get_if<Number>(&v)) {
      total = total * n->value;
    } else if (const auto* m = std::get_if<Money>(&v)) {
      if (currency) return NotSpecified{};
      currency = m->currency;
      total = total * m->amount;
    } else {
      return NotSpecified{};
    }
  }
  if (currency) return Money{total, *currency};
  return Number{total};
}

AttributeValue ratio(const AttributeValue& numerator, const AttributeValue& denominator) {
  std::optional<Decimal> den;
  if (const auto* n = std::get_if<Number>(&denominator)) den = n->value;
  if (!den) {
    const auto* dm = std::get_if<Money>(&denominator);
    const auto* nm = std::get_if<Money>(&numerator);
    if (!dm || !nm || dm->currency != nm->currency || dm->amount.is_zero()) return NotSpecified{};
    return Number{nm->amount / dm->amount};
  }
  if (den->is_zero()) return NotSpecified{};
  if (const auto* n = std::get_if<Number>(&numerator)) return Number{n->value / *den};
  if (const auto* m = std::get_if<Money>(&numerator)) return Money{m->amount / *den, m->currency};
  return NotSpecified{};
}

}  // namespace

std::string_view to_string(Combiner combiner) noexcept {
  switch (combiner) {
    case Combiner::sum: return "sum";
    case Combiner::product: return "product";
    case Combiner::ratio: return "ratio";
    case Combiner::concat: return "concat";
  }
  return "sum";
}

std::optional<Combiner> combiner_from_string(std::string_view name) noexcept {
  if (name == "sum") return Combiner::sum;
  if (name == "product") return Combiner::product;
  if (name == "ratio") return Combiner::ratio;
  if (name == "concat") return Combiner::concat;
  return std::nullopt;
}

AttributeValue combine(Combiner combiner, const std::vector<AttributeValue>& sources) {
  if (sources.empty()) return NotSpecified{};
  for (const auto& v : sources) {
    if (is_not_specified(v)) return NotSpecified{};
  }
  switch (combiner) {
    case Combiner::sum: return sum(sources);
    case Combiner::product: return product(sources);
    case Combiner::ratio:
      if (sources.size() != 2) return NotSpecified{};
      return ratio(sources[0], sources[1]);
    case Combiner::concat: {
      std::string joined;
      for (const auto& v : sources) {
        if (!joined.empty()) joined.push_back(' ');
        joined += query::render_value(v);
      }
      return Text{joined};
    }
  }
  return NotSpecified{};
}

std::map<ItemId, AttributeValue> recompute_derived(const Collection& collection,
                                                   const AttributeDescriptor& descriptor,
                                                   Combiner combiner) {
  if (descriptor.origin != Origin::derived || descriptor.source_attributes.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "attribute '" + descriptor.id + "' is not a derived attribute with sources");
  }
  if (combiner == Combiner::ratio && descriptor.source_attributes.size() != 2) {
    throw Error(ErrorCode::invalid_argument, "ratio needs exactly two source attributes");
  }
  for (const auto& src : descriptor.source_attributes) {
    if (!collection.find_attribute(src)) {
      throw Error(ErrorCode::unknown_source_attribute, "unknown source attribute '" + src + "'");
    }
  }
  std::map<ItemId, AttributeValue> out;
  std::vector<AttributeValue> sources;
  for (const auto& item : collection.items()) {
    sources.clear();
    for (const auto& src : descriptor.source_attributes) sources.push_back(collection.get_value(item, src));
    out.emplace(item.item_id, combine(combiner, sources));
  }
  return out;
}

}  // namespace malleable::model

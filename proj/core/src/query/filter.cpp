#include "malleable/query/filter.hpp"

#include <algorithm>
#include <cctype>

#include "malleable/query/compare.hpp"
#include "malleable/query/render.hpp"

namespace malleable::query {
namespace {

using namespace model;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool same_domain(const AttributeValue& value, const AttributeValue& bound) {
  if (value.index() != bound.index()) return false;
  if (const auto* m = std::get_if<Money>(&value)) return m->currency == std::get<Money>(bound).currency;
  return true;
}

}  // namespace

bool matches(const view::Predicate& p, const AttributeValue& value) {
  using Op = view::Predicate::Op;
  switch (p.op) {
    case Op::is_not_specified:
      return is_not_specified(value);
    case Op::negate:
      return !matches(*p.inner, value);
    case Op::equals:
      return compare(value, *p.value) == 0;
    default:
      break;
  }
  if (is_not_specified(value)) return false;
  switch (p.op) {
    case Op::contains:
      return lower(render_value(value)).find(lower(p.text)) != std::string::npos;
    case Op::range:
      if (p.lo && (!same_domain(value, *p.lo) || compare(value, *p.lo) < 0)) return false;
      if (p.hi && (!same_domain(value, *p.hi) || compare(value, *p.hi) > 0)) return false;
      return true;
    case Op::is_true:
      if (const auto* b = std::get_if<Boolean>(&value)) return b->value;
      if (const auto* c = std::get_if<ComponentRef>(&value)) return c->facet();
      return false;
    default:
      return false;
  }
}

bool passes(const std::vector<view::FilterSpec>& filters, const Collection& collection, const Item& item) {
  return std::all_of(filters.begin(), filters.end(), [&](const view::FilterSpec& f) {
    return matches(f.predicate, collection.get_value(item, f.attr));
  });
}

}  // namespace malleable::query

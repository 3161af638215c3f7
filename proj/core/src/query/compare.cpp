#include "malleable/query/compare.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace malleable::query {
namespace {

using namespace model;

std::strong_ordering compare_text(const std::string& a, const std::string& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ca = std::tolower(static_cast<unsigned char>(a[i]));
    const int cb = std::tolower(static_cast<unsigned char>(b[i]));
    if (ca != cb) return ca <=> cb;
  }
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.compare(b) <=> 0;
}

// Boolean facet for the boolean/component class.
bool facet(const AttributeValue& v) {
  if (const auto* b = std::get_if<Boolean>(&v)) return b->value;
  return std::get<ComponentRef>(v).facet();
}

std::strong_ordering compare_same_rank(const AttributeValue& a, const AttributeValue& b) {
  switch (kind_rank(a)) {
    case 0:
      return std::get<Number>(a).value <=> std::get<Number>(b).value;
    case 1: {
      const auto& ma = std::get<Money>(a);
      const auto& mb = std::get<Money>(b);
      if (ma.currency != mb.currency) return ma.currency.compare(mb.currency) <=> 0;
      return ma.amount <=> mb.amount;
    }
    case 2: {
      const auto& da = std::get<Date>(a);
      const auto& db = std::get<Date>(b);
      if (auto c = da.epoch_seconds <=> db.epoch_seconds; c != 0) return c;
      return da.iso.compare(db.iso) <=> 0;
    }
    case 3: {
      if (auto c = facet(a) <=> facet(b); c != 0) return c;
      const bool ca = std::holds_alternative<ComponentRef>(a);
      const bool cb = std::holds_alternative<ComponentRef>(b);
      if (ca != cb) return ca <=> cb;
      if (!ca) return std::strong_ordering::equal;
      const auto& ra = std::get<ComponentRef>(a);
      const auto& rb = std::get<ComponentRef>(b);
      if (auto c = ra.kind.compare(rb.kind) <=> 0; c != 0) return c;
      return ra.state.dump().compare(rb.state.dump()) <=> 0;
    }
    case 4:
      return compare_text(std::get<Text>(a).value, std::get<Text>(b).value);
    case 5: {
      const auto& ia = std::get<ImageRef>(a).uris;
      const auto& ib = std::get<ImageRef>(b).uris;
      return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end(),
                                                    [](const std::string& x, const std::string& y) {
                                                      return x.compare(y) <=> 0;
                                                    });
    }
    case 6: {
      const auto& ca = std::get<Color>(a);
      const auto& cb = std::get<Color>(b);
      return std::tie(ca.r, ca.g, ca.b) <=> std::tie(cb.r, cb.g, cb.b);
    }
    default:
      return std::strong_ordering::equal;
  }
}

}  // namespace

int kind_rank(const AttributeValue& value) noexcept {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Number>) return 0;
        else if constexpr (std::is_same_v<T, Money>) return 1;
        else if constexpr (std::is_same_v<T, Date>) return 2;
        else if constexpr (std::is_same_v<T, Boolean> || std::is_same_v<T, ComponentRef>) return 3;
        else if constexpr (std::is_same_v<T, Text>) return 4;
        else if constexpr (std::is_same_v<T, ImageRef>) return 5;
        else if constexpr (std::is_same_v<T, Color>) return 6;
        else return 7;
      },
      value);
}

std::strong_ordering compare(const AttributeValue& a, const AttributeValue& b) {
  const int ra = kind_rank(a);
  const int rb = kind_rank(b);
  if (ra != rb) return ra <=> rb;
  return compare_same_rank(a, b);
}

}  // namespace malleable::query

#include "malleable/query/render.hpp"

#include "malleable/error.hpp"

namespace malleable::query {
namespace {

using namespace model;

std::string render_money(const Money& m) {
  struct Format {
    std::string_view code;
    std::string_view symbol;
    int digits;
  };
  static constexpr Format kFormats[] = {
      {"USD", "$", 2}, {"EUR", "\xE2\x82\xAC", 2}, {"GBP", "\xC2\xA3", 2}, {"JPY", "\xC2\xA5", 0}};
  const std::string sign = m.amount.is_negative() ? "-" : "";
  const Decimal magnitude = m.amount.is_negative() ? -m.amount : m.amount;
  for (const auto& f : kFormats) {
    if (f.code == m.currency) return sign + std::string(f.symbol) + magnitude.to_fixed(f.digits);
  }
  return sign + magnitude.to_fixed(2) + " " + m.currency;
}

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

std::string render_value(const AttributeValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NotSpecified>) {
          return std::string(kNotSpecifiedLiteral);
        } else if constexpr (std::is_same_v<T, Text>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, Number>) {
          return v.value.to_string();
        } else if constexpr (std::is_same_v<T, Money>) {
          return render_money(v);
        } else if constexpr (std::is_same_v<T, Boolean>) {
          return v.value ? "Yes" : "No";
        } else if constexpr (std::is_same_v<T, Date>) {
          return v.iso;
        } else if constexpr (std::is_same_v<T, ImageRef>) {
          return std::to_string(v.uris.size()) + (v.uris.size() == 1 ? " image" : " images");
        } else if constexpr (std::is_same_v<T, ComponentRef>) {
          const bool has_facet =
              v.state.is_boolean() || (v.state.is_object() && v.state.contains("active"));
          if (!has_facet) return v.kind;
          return v.kind + (v.facet() ? " (on)" : " (off)");
        } else {
          return v.hex();
        }
      },
      value);
}

std::size_t utf8_length(std::string_view text) {
  std::size_t n = 0;
  for (unsigned char c : text) {
    if (!is_continuation(c)) ++n;
  }
  return n;
}

Truncated truncate_for_overview(const AttributeValue& value, std::size_t budget) {
  if (budget == 0) throw Error(ErrorCode::invalid_argument, "truncation budget must be at least 1");
  std::string rendered = render_value(value);
  if (!std::holds_alternative<Text>(value) || utf8_length(rendered) <= budget) {
    return {std::move(rendered), false};
  }
  static constexpr std::string_view kEllipsis = "\xE2\x80\xA6";
  // Byte offset just past the first (budget - 1) code points.
  std::size_t keep = 0;
  for (std::size_t points = 0; keep < rendered.size(); ++keep) {
    if (!is_continuation(static_cast<unsigned char>(rendered[keep]))) {
      if (points == budget - 1) break;
      ++points;
    }
  }
  std::string_view head(rendered.data(), keep);
  // Prefer a word boundary: the cut must fall on whitespace.
  const bool at_boundary = keep < rendered.size() && rendered[keep] == ' ';
  if (!at_boundary) {
    const auto space = head.find_last_of(' ');
    if (space != std::string_view::npos && space > 0) head = head.substr(0, space);
  }
  while (!head.empty() && head.back() == ' ') head.remove_suffix(1);
  std::string out(head);
  out += kEllipsis;
  return {std::move(out), true};
}

}  // namespace malleable::query

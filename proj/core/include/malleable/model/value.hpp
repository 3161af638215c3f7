#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "malleable/model/decimal.hpp"

namespace malleable::model {

/// The literal used on the wire and in provider answers for unknown values.
inline constexpr std::string_view kNotSpecifiedLiteral = "Not Specified";

enum class ValueKind { text, number, money, boolean, date, image_ref, component_ref, color };

std::string_view to_string(ValueKind kind) noexcept;
std::optional<ValueKind> value_kind_from_string(std::string_view name) noexcept;

struct NotSpecified {
  friend bool operator==(const NotSpecified&, const NotSpecified&) = default;
};

struct Text {
  std::string value;
  friend bool operator==(const Text&, const Text&) = default;
};

struct Number {
  Decimal value;
  friend bool operator==(const Number&, const Number&) = default;
};

struct Money {
  Decimal amount;
  std::string currency;  // ISO-4217 code, upper case
  friend bool operator==(const Money&, const Money&) = default;
};

struct Boolean {
  bool value = false;
  friend bool operator==(const Boolean&, const Boolean&) = default;
};

/// ISO-8601 calendar date or date-time. `epoch_seconds` is the UTC instant.
struct Date {
  std::string iso;
  std::int64_t epoch_seconds = 0;

  /// Accepts YYYY-MM-DD and YYYY-MM-DDThh:mm[:ss[.fff]][Z|(+|-)hh:mm].
  static std::optional<Date> parse(std::string_view text);
  friend bool operator==(const Date&, const Date&) = default;
};

struct ImageRef {
  std::vector<std::string> uris;
  friend bool operator==(const ImageRef&, const ImageRef&) = default;
};

/// An interactive element (button, gallery...) shown as an attribute.
/// The engine only looks at the boolean facet of its state.
struct ComponentRef {
  std::string kind;
  nlohmann::json state;

  /// true when state is `true`, or an object whose "active" member is `true`.
  bool facet() const;
  friend bool operator==(const ComponentRef&, const ComponentRef&) = default;
};

struct Color {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  /// "#rrggbb" (case-insensitive).
  static std::optional<Color> parse(std::string_view text);
  std::string hex() const;
  friend bool operator==(const Color&, const Color&) = default;
};

using AttributeValue =
    std::variant<NotSpecified, Text, Number, Money, Boolean, Date, ImageRef, ComponentRef, Color>;

inline bool is_not_specified(const AttributeValue& v) noexcept {
  return std::holds_alternative<NotSpecified>(v);
}

/// Kind of a concrete value; nullopt for NotSpecified.
std::optional<ValueKind> kind_of(const AttributeValue& value) noexcept;

/// Self-describing JSON form used in event payloads: {"<kind>": ...} or the
/// "Not Specified" string.
nlohmann::json to_tagged_json(const AttributeValue& value);
/// Throws Error(schema_violation) on malformed input.
AttributeValue from_tagged_json(const nlohmann::json& json);

/// Parses "USD 35.00", "35.00 USD", "$35.00", "€12" style strings.
std::optional<Money> parse_money(std::string_view text);

}  // namespace malleable::model

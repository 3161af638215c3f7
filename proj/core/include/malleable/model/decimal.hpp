#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace malleable::model {

/// Base-10 number with an arbitrary-precision coefficient:
/// value = coefficient * 10^exponent. Arithmetic results are rounded
/// half-even to `kPrecision` significant digits.
///
/// The textual scale is preserved ("35.00" stays "35.00") while equality
/// and ordering compare numeric value only.
class Decimal {
 public:
  using Coefficient = boost::multiprecision::cpp_int;

  static constexpr int kPrecision = 28;

  Decimal() = default;
  Decimal(std::int64_t integer);  // NOLINT(google-explicit-constructor)
  Decimal(Coefficient coefficient, std::int32_t exponent);

  /// Accepts [+-]digits[.digits][(e|E)[+-]digits]. Throws std::invalid_argument.
  static Decimal parse(std::string_view text);
  static bool try_parse(std::string_view text, Decimal& out) noexcept;

  const Coefficient& coefficient() const noexcept { return coefficient_; }
  std::int32_t exponent() const noexcept { return exponent_; }

  bool is_zero() const noexcept { return coefficient_ == 0; }
  bool is_negative() const noexcept { return coefficient_ < 0; }

  /// Plain positional notation, never scientific.
  std::string to_string() const;
  /// Fixed number of fractional digits, rounded half-even.
  std::string to_fixed(int fractional_digits) const;
  double to_double() const;

  /// Number of significant digits in the coefficient (0 for zero).
  int significant_digits() const;
  Decimal round_significant(int digits) const;
  /// Strips trailing zeros from the coefficient.
  Decimal normalized() const;

  Decimal operator-() const;
  friend Decimal operator+(const Decimal& a, const Decimal& b);
  friend Decimal operator-(const Decimal& a, const Decimal& b);
  friend Decimal operator*(const Decimal& a, const Decimal& b);
  /// Throws std::domain_error on division by zero.
  friend Decimal operator/(const Decimal& a, const Decimal& b);

  friend bool operator==(const Decimal& a, const Decimal& b);
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);

 private:
  Coefficient coefficient_{0};
  std::int32_t exponent_{0};
};

}  // namespace malleable::model

#include "malleable/model/decimal.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace malleable::model {
namespace {

using Coefficient = Decimal::Coefficient;

Coefficient pow10(std::int64_t n) {
  Coefficient result = 1;
  Coefficient base = 10;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

int digit_count(const Coefficient& c) {
  if (c == 0) return 0;
  Coefficient m = c < 0 ? Coefficient(-c) : c;
  return static_cast<int>(m.str().size());
}

// Divides `value` by 10^drop, rounding half-even. `sticky` marks a nonzero
// remainder discarded before this call.
Coefficient shift_right_rounded(const Coefficient& value, int drop, bool sticky = false) {
  if (drop <= 0) return value;
  const bool negative = value < 0;
  Coefficient magnitude = negative ? Coefficient(-value) : value;
  const Coefficient divisor = pow10(drop);
  Coefficient quotient = magnitude / divisor;
  Coefficient remainder = magnitude % divisor;
  const Coefficient twice = remainder * 2;
  if (twice > divisor || (twice == divisor && (sticky || (quotient & 1) != 0))) {
    quotient += 1;
  }
  return negative ? Coefficient(-quotient) : quotient;
}

// Brings both operands to the smaller exponent.
void align(const Decimal& a, const Decimal& b, Coefficient& ca, Coefficient& cb, std::int32_t& exp) {
  exp = std::min(a.exponent(), b.exponent());
  ca = a.coefficient() * pow10(a.exponent() - exp);
  cb = b.coefficient() * pow10(b.exponent() - exp);
}

}  // namespace

Decimal::Decimal(std::int64_t integer) : coefficient_(integer), exponent_(0) {}

Decimal::Decimal(Coefficient coefficient, std::int32_t exponent)
    : coefficient_(std::move(coefficient)), exponent_(exponent) {}

bool Decimal::try_parse(std::string_view text, Decimal& out) noexcept {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  std::int64_t exponent = 0;
  bool seen_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits.push_back(text[i++]);
    seen_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits.push_back(text[i++]);
      --exponent;
      seen_digit = true;
    }
  }
  if (!seen_digit) return false;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    std::int64_t e = 0;
    bool exp_digit = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = e * 10 + (text[i++] - '0');
      exp_digit = true;
      if (e > 400) return false;
    }
    if (!exp_digit) return false;
    exponent += exp_negative ? -e : e;
  }
  if (i != text.size()) return false;
  const auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  try {
    Coefficient c(digits);
    out = Decimal(negative ? Coefficient(-c) : c, static_cast<std::int32_t>(exponent));
  } catch (...) {
    return false;
  }
  return true;
}

Decimal Decimal::parse(std::string_view text) {
  Decimal result;
  if (!try_parse(text, result)) {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  }
  return result;
}

std::string Decimal::to_string() const {
  const bool negative = coefficient_ < 0;
  std::string digits = (negative ? Coefficient(-coefficient_) : coefficient_).str();
  std::string out;
  if (exponent_ >= 0) {
    out = digits;
    if (coefficient_ != 0) out.append(static_cast<std::size_t>(exponent_), '0');
  } else {
    const std::size_t frac = static_cast<std::size_t>(-exponent_);
    if (digits.size() <= frac) digits.insert(0, frac - digits.size() + 1, '0');
    out = digits.substr(0, digits.size() - frac) + "." + digits.substr(digits.size() - frac);
  }
  return negative ? "-" + out : out;
}

std::string Decimal::to_fixed(int fractional_digits) const {
  const std::int32_t target = -fractional_digits;
  Decimal scaled;
  if (exponent_ >= target) {
    scaled = Decimal(coefficient_ * pow10(exponent_ - target), target);
  } else {
    scaled = Decimal(shift_right_rounded(coefficient_, target - exponent_), target);
  }
  return scaled.to_string();
}

double Decimal::to_double() const { return std::stod(to_string()); }

int Decimal::significant_digits() const { return digit_count(coefficient_); }

Decimal Decimal::round_significant(int digits) const {
  const int have = significant_digits();
  if (have <= digits) return *this;
  const int drop = have - digits;
  Coefficient rounded = shift_right_rounded(coefficient_, drop);
  std::int32_t exponent = exponent_ + drop;
  // Rounding may carry into an extra digit (999 -> 1000).
  if (digit_count(rounded) > digits) {
    rounded = shift_right_rounded(rounded, 1);
    exponent += 1;
  }
  return Decimal(rounded, exponent);
}

Decimal Decimal::normalized() const {
  if (coefficient_ == 0) return Decimal(0, 0);
  Coefficient c = coefficient_;
  std::int32_t e = exponent_;
  while (c % 10 == 0) {
    c /= 10;
    ++e;
  }
  return Decimal(c, e);
}

Decimal Decimal::operator-() const { return Decimal(-coefficient_, exponent_); }

Decimal operator+(const Decimal& a, const Decimal& b) {
  Coefficient ca, cb;
  std::int32_t exp;
  align(a, b, ca, cb, exp);
  return Decimal(ca + cb, exp).round_significant(Decimal::kPrecision);
}

Decimal operator-(const Decimal& a, const Decimal& b) { return a + (-b); }

Decimal operator*(const Decimal& a, const Decimal& b) {
  return Decimal(a.coefficient_ * b.coefficient_, a.exponent_ + b.exponent_)
      .round_significant(Decimal::kPrecision);
}

Decimal operator/(const Decimal& a, const Decimal& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return Decimal(0, a.exponent_ - b.exponent_);
  const bool negative = (a.coefficient_ < 0) != (b.coefficient_ < 0);
  const Coefficient na = a.coefficient_ < 0 ? Coefficient(-a.coefficient_) : a.coefficient_;
  const Coefficient nb = b.coefficient_ < 0 ? Coefficient(-b.coefficient_) : b.coefficient_;
  // Scale the dividend so the quotient carries two guard digits.
  const int shift = std::max(0, Decimal::kPrecision + 2 + digit_count(nb) - digit_count(na));
  const Coefficient scaled = na * pow10(shift);
  Coefficient quotient = scaled / nb;
  const bool sticky = (scaled % nb) != 0;
  std::int32_t exponent = a.exponent_ - b.exponent_ - shift;
  const int excess = digit_count(quotient) - Decimal::kPrecision;
  if (excess > 0) {
    // Fold the discarded remainder in as a sticky low digit so ties resolve correctly.
    Coefficient widened = quotient * 10 + (sticky ? 1 : 0);
    quotient = shift_right_rounded(widened, excess + 1);
    exponent += excess;
    if (digit_count(quotient) > Decimal::kPrecision) {
      quotient = shift_right_rounded(quotient, 1);
      exponent += 1;
    }
  }
  Decimal result(negative ? Coefficient(-quotient) : quotient, exponent);
  if (!sticky) {
    // Exact quotient: drop zeros introduced by scaling, down to the ideal exponent.
    const std::int32_t ideal = a.exponent_ - b.exponent_;
    Coefficient c = result.coefficient_;
    std::int32_t e = result.exponent_;
    while (e < ideal && c % 10 == 0 && c != 0) {
      c /= 10;
      ++e;
    }
    result = Decimal(c, e);
  }
  return result;
}

bool operator==(const Decimal& a, const Decimal& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  Coefficient ca, cb;
  std::int32_t exp;
  // Cheap path: differing signs.
  const int sa = a.coefficient_ < 0 ? -1 : (a.coefficient_ > 0 ? 1 : 0);
  const int sb = b.coefficient_ < 0 ? -1 : (b.coefficient_ > 0 ? 1 : 0);
  if (sa != sb) return sa <=> sb;
  align(a, b, ca, cb, exp);
  if (ca < cb) return std::strong_ordering::less;
  if (ca > cb) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace malleable::model

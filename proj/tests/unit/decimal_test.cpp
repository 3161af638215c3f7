#include <cstdint>
#include <random>
#include <string>

#include "doctest.h"
#include "malleable/model/decimal.hpp"

using malleable::model::Decimal;

namespace {

// Scaled-integer reference: value = units / 10^scale.
std::string scaled_to_string(__int128 units, int scale) {
  const bool negative = units < 0;
  unsigned __int128 magnitude = negative ? -units : units;
  std::string digits;
  do {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  } while (magnitude > 0);
  if (scale > 0) {
    if (digits.size() <= static_cast<std::size_t>(scale)) digits.insert(0, scale - digits.size() + 1, '0');
    digits.insert(digits.end() - scale, '.');
  }
  return (negative ? "-" : "") + digits;
}

}  // namespace

TEST_SUITE("decimal") {
  TEST_CASE("parse keeps scale and compares by value") {
    CHECK(Decimal::parse("35.00").to_string() == "35.00");
    CHECK(Decimal::parse("35.00") == Decimal::parse("35"));
    CHECK(Decimal::parse("-0.5") < Decimal(0));
    CHECK(Decimal::parse("1e3").to_string() == "1000");
    CHECK(Decimal::parse("1.5E-2").to_string() == "0.015");
    CHECK(Decimal::parse("+7").to_string() == "7");
  }

  TEST_CASE("leading zeros are decimal, not octal") {
    CHECK(Decimal::parse("0.8").to_string() == "0.8");
    CHECK(Decimal::parse("08").to_string() == "8");
    CHECK(Decimal::parse("0.09") == Decimal(9) / Decimal(100));
    CHECK(Decimal::parse("000").is_zero());
  }

  TEST_CASE("malformed text is rejected") {
    Decimal d;
    for (const char* text : {"", "-", ".", "1.2.3", "abc", "1e", "12x", " 1", "1e999"}) {
      CHECK_MESSAGE(!Decimal::try_parse(text, d), text);
    }
    CHECK_THROWS_AS(Decimal::parse("nope"), std::invalid_argument);
  }

  TEST_CASE("addition, subtraction and multiplication match a scaled-integer oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> units(-10'000'000, 10'000'000);
    std::uniform_int_distribution<int> scales(0, 4);
    for (int i = 0; i < 2000; ++i) {
      const std::int64_t a = units(rng);
      const std::int64_t b = units(rng);
      const int sa = scales(rng);
      const int sb = scales(rng);
      const Decimal da = Decimal::parse(scaled_to_string(a, sa));
      const Decimal db = Decimal::parse(scaled_to_string(b, sb));

      const int s = std::max(sa, sb);
      __int128 pa = a, pb = b;
      for (int k = sa; k < s; ++k) pa *= 10;
      for (int k = sb; k < s; ++k) pb *= 10;
      CHECK((da + db) == Decimal::parse(scaled_to_string(pa + pb, s)));
      CHECK((da - db) == Decimal::parse(scaled_to_string(pa - pb, s)));
      CHECK((da * db) == Decimal::parse(scaled_to_string(static_cast<__int128>(a) * b, sa + sb)));
      CHECK(((da < db) == (pa < pb)));
    }
  }

  TEST_CASE("division rounds half-even to 28 significant digits") {
    CHECK((Decimal(1) / Decimal(4)).to_string() == "0.25");
    CHECK((Decimal(1) / Decimal(3)).to_string() == "0." + std::string(28, '3'));
    CHECK((Decimal(2) / Decimal(3)).to_string() == "0." + std::string(27, '6') + "7");
    CHECK((Decimal(3840) / Decimal(27)).round_significant(6).to_string() == "142.222");
    CHECK_THROWS_AS(Decimal(1) / Decimal(0), std::domain_error);
  }

  TEST_CASE("to_fixed rounds half-even") {
    CHECK(Decimal::parse("2.345").to_fixed(2) == "2.34");
    CHECK(Decimal::parse("2.355").to_fixed(2) == "2.36");
    CHECK(Decimal::parse("39.99").to_fixed(0) == "40");
    CHECK(Decimal(5).to_fixed(2) == "5.00");
    CHECK(Decimal::parse("-1.005").to_fixed(2) == "-1.00");
  }

  TEST_CASE("normalized strips trailing zeros") {
    CHECK(Decimal::parse("35.00").normalized().to_string() == "35");
    CHECK(Decimal::parse("1.2300").normalized().to_string() == "1.23");
    CHECK(Decimal::parse("0.000").normalized().is_zero());
    CHECK(Decimal::parse("123.45").significant_digits() == 5);
  }
}

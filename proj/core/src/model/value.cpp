#include "malleable/model/value.hpp"

#include <array>
#include <cctype>
#include <chrono>
#include <cstdio>

#include "malleable/error.hpp"

namespace malleable::model {
namespace {

constexpr std::array<std::pair<ValueKind, std::string_view>, 8> kKindNames{{
    {ValueKind::text, "text"},
    {ValueKind::number, "number"},
    {ValueKind::money, "money"},
    {ValueKind::boolean, "boolean"},
    {ValueKind::date, "date"},
    {ValueKind::image_ref, "image_ref"},
    {ValueKind::component_ref, "component_ref"},
    {ValueKind::color, "color"},
}};

struct CurrencySymbol {
  std::string_view symbol;
  std::string_view code;
};
constexpr std::array<CurrencySymbol, 5> kSymbols{{
    {"US$", "USD"}, {"$", "USD"}, {"\xE2\x82\xAC", "EUR"}, {"\xC2\xA3", "GBP"}, {"\xC2\xA5", "JPY"}}};

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

bool is_currency_code(std::string_view s) {
  if (s.size() != 3) return false;
  for (char c : s) {
    if (!std::isupper(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_tagged(const nlohmann::json& json) {
  throw Error(ErrorCode::schema_violation, "malformed tagged value: " + json.dump());
}

}  // namespace

std::string_view to_string(ValueKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "text";
}

std::optional<ValueKind> value_kind_from_string(std::string_view name) noexcept {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::optional<Date> Date::parse(std::string_view text) {
  using namespace std::chrono;
  // YYYY-MM-DD
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  int y = 0, mo = 0, d = 0;
  if (!parse_int(text.substr(0, 4), y) || !parse_int(text.substr(5, 2), mo) ||
      !parse_int(text.substr(8, 2), d)) {
    return std::nullopt;
  }
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  std::int64_t seconds = sys_days{ymd}.time_since_epoch().count() * 86400LL;
  std::string_view rest = text.substr(10);
  if (!rest.empty()) {
    if (rest[0] != 'T' && rest[0] != ' ') return std::nullopt;
    rest.remove_prefix(1);
    int hh = 0, mm = 0, ss = 0;
    if (rest.size() < 5 || rest[2] != ':' || !parse_int(rest.substr(0, 2), hh) ||
        !parse_int(rest.substr(3, 2), mm)) {
      return std::nullopt;
    }
    rest.remove_prefix(5);
    if (!rest.empty() && rest[0] == ':') {
      if (rest.size() < 3 || !parse_int(rest.substr(1, 2), ss)) return std::nullopt;
      rest.remove_prefix(3);
      if (!rest.empty() && rest[0] == '.') {
        rest.remove_prefix(1);
        while (!rest.empty() && std::isdigit(static_cast<unsigned char>(rest[0]))) rest.remove_prefix(1);
      }
    }
    if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
    seconds += hh * 3600 + mm * 60 + ss;
    if (rest == "Z") {
      rest = {};
    } else if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
      int oh = 0, om = 0;
      if (rest.size() != 6 || rest[3] != ':' || !parse_int(rest.substr(1, 2), oh) ||
          !parse_int(rest.substr(4, 2), om)) {
        return std::nullopt;
      }
      const int offset = oh * 3600 + om * 60;
      seconds += rest[0] == '+' ? -offset : offset;
      rest = {};
    }
    if (!rest.empty()) return std::nullopt;
  }
  return Date{std::string(text), seconds};
}

bool ComponentRef::facet() const {
  if (state.is_boolean()) return state.get<bool>();
  if (state.is_object()) {
    auto it = state.find("active");
    return it != state.end() && it->is_boolean() && it->get<bool>();
  }
  return false;
}

std::optional<Color> Color::parse(std::string_view text) {
  if (text.size() != 7 || text[0] != '#') return std::nullopt;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  std::array<std::uint8_t, 3> rgb{};
  for (std::size_t i = 0; i < 3; ++i) {
    const int hi = nibble(text[1 + 2 * i]);
    const int lo = nibble(text[2 + 2 * i]);
    if (hi < 0 || lo < 0) return std::nullopt;
    rgb[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return Color{rgb[0], rgb[1], rgb[2]};
}

std::string Color::hex() const {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

std::optional<ValueKind> kind_of(const AttributeValue& value) noexcept {
  switch (value.index()) {
    case 0: return std::nullopt;
    case 1: return ValueKind::text;
    case 2: return ValueKind::number;
    case 3: return ValueKind::money;
    case 4: return ValueKind::boolean;
    case 5: return ValueKind::date;
    case 6: return ValueKind::image_ref;
    case 7: return ValueKind::component_ref;
    case 8: return ValueKind::color;
  }
  return std::nullopt;
}

std::optional<Money> parse_money(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string currency;
  for (const auto& s : kSymbols) {
    if (text.substr(0, s.symbol.size()) == s.symbol) {
      currency = s.code;
      text = trim(text.substr(s.symbol.size()));
      break;
    }
  }
  if (currency.empty()) {
    if (text.size() > 4 && is_currency_code(text.substr(0, 3)) && text[3] == ' ') {
      currency = text.substr(0, 3);
      text = trim(text.substr(4));
    } else if (text.size() > 4 && is_currency_code(text.substr(text.size() - 3)) &&
               text[text.size() - 4] == ' ') {
      currency = text.substr(text.size() - 3);
      text = trim(text.substr(0, text.size() - 4));
    } else {
      return std::nullopt;
    }
  }
  std::string digits;
  for (char c : text) {
    if (c != ',') digits.push_back(c);
  }
  Decimal amount;
  if (!Decimal::try_parse(digits, amount)) return std::nullopt;
  return Money{negative ? -amount : amount, currency};
}

nlohmann::json to_tagged_json(const AttributeValue& value) {
  using nlohmann::json;
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NotSpecified>) {
          return std::string(kNotSpecifiedLiteral);
        } else if constexpr (std::is_same_v<T, Text>) {
          return json{{"text", v.value}};
        } else if constexpr (std::is_same_v<T, Number>) {
          return json{{"number", v.value.to_string()}};
        } else if constexpr (std::is_same_v<T, Money>) {
          return json{{"money", {{"amount", v.amount.to_string()}, {"currency", v.currency}}}};
        } else if constexpr (std::is_same_v<T, Boolean>) {
          return json{{"boolean", v.value}};
        } else if constexpr (std::is_same_v<T, Date>) {
          return json{{"date", v.iso}};
        } else if constexpr (std::is_same_v<T, ImageRef>) {
          return json{{"image_ref", v.uris}};
        } else if constexpr (std::is_same_v<T, ComponentRef>) {
          return json{{"component_ref", {{"component", v.kind}, {"state", v.state}}}};
        } else {
          return json{{"color", v.hex()}};
        }
      },
      value);
}

AttributeValue from_tagged_json(const nlohmann::json& json) {
  if (json.is_string() && json.get<std::string>() == kNotSpecifiedLiteral) return NotSpecified{};
  if (!json.is_object() || json.size() != 1) bad_tagged(json);
  const auto it = json.begin();
  const std::string& tag = it.key();
  const auto& body = it.value();
  try {
    if (tag == "text") return Text{body.get<std::string>()};
    if (tag == "number") return Number{Decimal::parse(body.get<std::string>())};
    if (tag == "money") {
      std::string code = body.at("currency").get<std::string>();
      return Money{Decimal::parse(body.at("amount").get<std::string>()), code};
    }
    if (tag == "boolean") return Boolean{body.get<bool>()};
    if (tag == "date") {
      auto d = Date::parse(body.get<std::string>());
      if (!d) bad_tagged(json);
      return *d;
    }
    if (tag == "image_ref") return ImageRef{body.get<std::vector<std::string>>()};
    if (tag == "component_ref") {
      return ComponentRef{body.at("component").get<std::string>(), body.value("state", nlohmann::json())};
    }
    if (tag == "color") {
      auto c = Color::parse(body.get<std::string>());
      if (!c) bad_tagged(json);
      return *c;
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    bad_tagged(json);
  }
  bad_tagged(json);
}

}  // namespace malleable::model

#include "malleable/synthesis/inference.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "malleable/model/decimal.hpp"

namespace malleable::synthesis {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

model::AttributeValue infer_value(std::string_view extracted) {
  const auto text = trim(extracted);
  if (iequals(text, model::kNotSpecifiedLiteral)) return model::NotSpecified{};
  if (iequals(text, "yes") || iequals(text, "true")) return model::Boolean{true};
  if (iequals(text, "no") || iequals(text, "false")) return model::Boolean{false};
  if (model::Decimal number; model::Decimal::try_parse(text, number)) return model::Number{number};
  if (auto money = model::parse_money(text)) return *money;
  if (auto date = model::Date::parse(text)) return *date;
  if (auto color = model::Color::parse(text)) return *color;
  return model::Text{std::string(text)};
}

}  // namespace malleable::synthesis

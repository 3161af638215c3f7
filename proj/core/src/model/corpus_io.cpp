#include "malleable/model/corpus_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "malleable/error.hpp"

namespace malleable::model {
namespace {

using nlohmann::json;

[[noreturn]] void violation(const AttributeDescriptor& d, const json& value, std::string_view expected) {
  throw Error(ErrorCode::schema_violation, "attribute '" + d.id + "' expects " + std::string(expected) +
                                               ", got " + value.dump());
}

std::optional<Decimal> decimal_from_json(const json& j) {
  Decimal d;
  if (j.is_number_integer() || j.is_number_unsigned() || j.is_number_float()) {
    if (Decimal::try_parse(j.dump(), d)) return d;
    return std::nullopt;
  }
  if (j.is_string() && Decimal::try_parse(j.get<std::string>(), d)) return d;
  return std::nullopt;
}

}  // namespace

json value_to_json(const AttributeValue& value) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NotSpecified>) {
          return std::string(kNotSpecifiedLiteral);
        } else if constexpr (std::is_same_v<T, Text>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, Number>) {
          // JSON numbers only when a double carries every digit.
          const std::string text = v.value.to_string();
          if (v.value.normalized().significant_digits() <= 15 && v.value.exponent() > -300) {
            return json::parse(text);
          }
          return text;
        } else if constexpr (std::is_same_v<T, Money>) {
          return json{{"amount", v.amount.to_string()}, {"currency", v.currency}};
        } else if constexpr (std::is_same_v<T, Boolean>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, Date>) {
          return v.iso;
        } else if constexpr (std::is_same_v<T, ImageRef>) {
          return v.uris;
        } else if constexpr (std::is_same_v<T, ComponentRef>) {
          return json{{"component", v.kind}, {"state", v.state}};
        } else {
          return v.hex();
        }
      },
      value);
}

AttributeValue value_from_json(const json& j, const AttributeDescriptor& d) {
  if (j.is_null() || (j.is_string() && j.get<std::string>() == kNotSpecifiedLiteral)) {
    return NotSpecified{};
  }
  switch (d.value_kind) {
    case ValueKind::text:
      if (j.is_string()) return Text{j.get<std::string>()};
      return Text{j.dump()};
    case ValueKind::number:
      if (auto dec = decimal_from_json(j)) return Number{*dec};
      violation(d, j, "a number");
    case ValueKind::money: {
      if (j.is_object()) {
        auto amount_it = j.find("amount");
        if (amount_it == j.end()) violation(d, j, "money {amount, currency}");
        auto amount = decimal_from_json(*amount_it);
        std::optional<std::string> currency = d.currency;
        if (auto c = j.find("currency"); c != j.end() && c->is_string()) currency = c->get<std::string>();
        if (!amount || !currency) violation(d, j, "money {amount, currency}");
        return Money{*amount, *currency};
      }
      if (j.is_string()) {
        if (auto m = parse_money(j.get<std::string>())) return *m;
      }
      if (d.currency) {
        if (auto amount = decimal_from_json(j)) return Money{*amount, *d.currency};
      }
      violation(d, j, "money");
    }
    case ValueKind::boolean:
      if (j.is_boolean()) return Boolean{j.get<bool>()};
      violation(d, j, "a boolean");
    case ValueKind::date:
      if (j.is_string()) {
        if (auto date = Date::parse(j.get<std::string>())) return *date;
      }
      violation(d, j, "an ISO-8601 date");
    case ValueKind::image_ref:
      if (j.is_string()) return ImageRef{{j.get<std::string>()}};
      if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_string(); })) {
        return ImageRef{j.get<std::vector<std::string>>()};
      }
      violation(d, j, "an image URI or list of URIs");
    case ValueKind::component_ref:
      if (j.is_object() && j.contains("component") && j["component"].is_string()) {
        return ComponentRef{j["component"].get<std::string>(), j.value("state", json())};
      }
      if (j.is_boolean()) return ComponentRef{d.id, j};
      violation(d, j, "a component {component, state}");
    case ValueKind::color:
      if (j.is_string()) {
        if (auto c = Color::parse(j.get<std::string>())) return *c;
      }
      if (j.is_array() && j.size() == 3 &&
          std::all_of(j.begin(), j.end(), [](const json& e) {
            return e.is_number_integer() && e.get<int>() >= 0 && e.get<int>() <= 255;
          })) {
        return Color{j[0].get<std::uint8_t>(), j[1].get<std::uint8_t>(), j[2].get<std::uint8_t>()};
      }
      violation(d, j, "an sRGB color");
  }
  violation(d, j, "a known kind");
}

json descriptor_to_json(const AttributeDescriptor& d) {
  json out{{"id", d.id}, {"display_name", d.display_name}, {"value_kind", to_string(d.value_kind)}};
  if (d.currency) out["currency"] = *d.currency;
  if (d.origin != Origin::source) out["origin"] = to_string(d.origin);
  if (!d.source_attributes.empty()) out["source_attributes"] = d.source_attributes;
  if (d.prompt) out["prompt"] = *d.prompt;
  return out;
}

AttributeDescriptor descriptor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
    throw Error(ErrorCode::malformed_document, "schema entry needs a string id: " + j.dump());
  }
  AttributeDescriptor d;
  d.id = j["id"].get<std::string>();
  d.display_name = j.value("display_name", d.id);
  if (auto kind = j.find("value_kind"); kind != j.end()) {
    auto parsed = kind->is_string() ? value_kind_from_string(kind->get<std::string>()) : std::nullopt;
    if (!parsed) throw Error(ErrorCode::malformed_document, "unknown value_kind for '" + d.id + "'");
    d.value_kind = *parsed;
  }
  if (auto c = j.find("currency"); c != j.end() && c->is_string()) d.currency = c->get<std::string>();
  if (auto o = j.find("origin"); o != j.end()) {
    auto parsed = o->is_string() ? origin_from_string(o->get<std::string>()) : std::nullopt;
    if (!parsed) throw Error(ErrorCode::malformed_document, "unknown origin for '" + d.id + "'");
    d.origin = *parsed;
  }
  if (auto s = j.find("source_attributes"); s != j.end()) {
    if (!s->is_array() || !std::all_of(s->begin(), s->end(), [](const json& e) { return e.is_string(); })) {
      throw Error(ErrorCode::malformed_document, "source_attributes of '" + d.id + "' must be strings");
    }
    d.source_attributes = s->get<std::vector<AttributeId>>();
  }
  if (auto p = j.find("prompt"); p != j.end() && p->is_string()) d.prompt = p->get<std::string>();
  return d;
}

Collection collection_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::malformed_document, "corpus must be a JSON object");
  for (const char* key : {"collection_id", "schema", "items"}) {
    if (!doc.contains(key)) {
      throw Error(ErrorCode::malformed_document, std::string("corpus is missing '") + key + "'");
    }
  }
  if (!doc["schema"].is_array() || !doc["items"].is_array()) {
    throw Error(ErrorCode::malformed_document, "corpus 'schema' and 'items' must be arrays");
  }
  std::vector<AttributeDescriptor> schema;
  for (const auto& entry : doc["schema"]) schema.push_back(descriptor_from_json(entry));
  std::map<std::string, const AttributeDescriptor*> by_id;
  for (const auto& d : schema) by_id[d.id] = &d;

  std::vector<Item> items;
  items.reserve(doc["items"].size());
  for (const auto& entry : doc["items"]) {
    if (!entry.is_object() || !entry.contains("item_id") || !entry["item_id"].is_string()) {
      throw Error(ErrorCode::malformed_document, "item needs a string item_id: " + entry.dump());
    }
    Item item;
    item.item_id = entry["item_id"].get<std::string>();
    const json values = entry.value("values", json::object());
    if (!values.is_object()) {
      throw Error(ErrorCode::malformed_document, "item '" + item.item_id + "' values must be an object");
    }
    for (const auto& [attr, raw] : values.items()) {
      auto it = by_id.find(attr);
      if (it == by_id.end()) {
        throw Error(ErrorCode::schema_violation,
                    "item '" + item.item_id + "' has value for undeclared attribute '" + attr + "'");
      }
      try {
        item.values.emplace(attr, value_from_json(raw, *it->second));
      } catch (const Error& e) {
        throw Error(e.code(), "item '" + item.item_id + "': " + e.what());
      }
    }
    items.push_back(std::move(item));
  }
  const std::string id = doc["collection_id"].is_string() ? doc["collection_id"].get<std::string>() : "";
  return Collection(id, doc.value("title", id), std::move(schema), std::move(items));
}

Collection ingest_corpus(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::malformed_document, std::string("corpus is not valid JSON: ") + e.what());
  }
  return collection_from_json(doc);
}

json collection_to_json(const Collection& c) {
  json schema = json::array();
  for (const auto& d : c.schema()) schema.push_back(descriptor_to_json(d));
  json items = json::array();
  for (const auto& item : c.items()) {
    json values = json::object();
    for (const auto& [attr, value] : item.values) values[attr] = value_to_json(value);
    items.push_back({{"item_id", item.item_id}, {"values", std::move(values)}});
  }
  return {{"collection_id", c.id()}, {"title", c.title()}, {"schema", std::move(schema)},
          {"items", std::move(items)}};
}

Collection load_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::configuration, "cannot read corpus file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ingest_corpus(buffer.str());
}

}  // namespace malleable::model

#include "malleable/synthesis/templates.hpp"

#include <nlohmann/json.hpp>

#include "malleable/model/corpus_io.hpp"

namespace malleable::synthesis {

namespace assets {
extern const std::string_view resolve_attribute;
extern const std::string_view generate_value;
extern const std::string_view transform_value;
}  // namespace assets

std::string_view to_string(TemplateKind kind) noexcept {
  switch (kind) {
    case TemplateKind::resolve_attribute: return "resolve_attribute";
    case TemplateKind::generate_value: return "generate_value";
    case TemplateKind::transform_value: return "transform_value";
  }
  return "resolve_attribute";
}

std::string_view template_text(TemplateKind kind) noexcept {
  switch (kind) {
    case TemplateKind::resolve_attribute: return assets::resolve_attribute;
    case TemplateKind::generate_value: return assets::generate_value;
    case TemplateKind::transform_value: return assets::transform_value;
  }
  return {};
}

std::string substitute(std::string_view text, const std::map<std::string, std::string>& variables) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto open = text.find("${", pos);
    if (open == std::string_view::npos) break;
    const auto close = text.find('}', open + 2);
    if (close == std::string_view::npos) break;
    out.append(text.substr(pos, open - pos));
    const std::string name(text.substr(open + 2, close - open - 2));
    auto it = variables.find(name);
    if (it != variables.end()) {
      out += it->second;
    } else {
      out.append(text.substr(open, close - open + 1));
    }
    pos = close + 1;
  }
  out.append(text.substr(pos));
  return out;
}

std::string serialize_item_context(const model::Item& item) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [attr, value] : item.values) values[attr] = model::value_to_json(value);
  return values.dump();
}

std::string render_resolve_prompt(std::string_view item_attributes, std::string_view user_prompt) {
  return substitute(template_text(TemplateKind::resolve_attribute),
                    {{"itemAttributes", std::string(item_attributes)}, {"userPrompt", std::string(user_prompt)}});
}

std::string render_generate_prompt(std::string_view item_attributes, std::string_view attribute_name,
                                   std::string_view attribute_prompt) {
  return substitute(template_text(TemplateKind::generate_value),
                    {{"itemAttributes", std::string(item_attributes)},
                     {"attribute.name", std::string(attribute_name)},
                     {"attribute.prompt", std::string(attribute_prompt)}});
}

std::string render_transform_prompt(std::string_view item_attributes, const TransformExample& example,
                                    std::string_view attribute_name, std::string_view attribute_value,
                                    std::string_view user_prompt) {
  return substitute(template_text(TemplateKind::transform_value),
                    {{"itemAttributes", std::string(item_attributes)},
                     {"exampleAttribute.name", example.name},
                     {"exampleAttribute.value", example.value},
                     {"attribute.name", std::string(attribute_name)},
                     {"attribute.value", std::string(attribute_value)},
                     {"userPrompt", std::string(user_prompt)}});
}

}  // namespace malleable::synthesis

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "malleable/model/collection.hpp"

namespace malleable::synthesis {

enum class TemplateKind { resolve_attribute, generate_value, transform_value };

std::string_view to_string(TemplateKind kind) noexcept;

/// The stored template text, byte for byte, with its ${...} placeholders.
std::string_view template_text(TemplateKind kind) noexcept;

/// Single-pass ${name} substitution; substituted text is never rescanned and
/// unknown placeholders are left untouched.
std::string substitute(std::string_view text, const std::map<std::string, std::string>& variables);

/// Item context handed to providers: compact JSON of the item's values with
/// keys in sorted order.
std::string serialize_item_context(const model::Item& item);

std::string render_resolve_prompt(std::string_view item_attributes, std::string_view user_prompt);

std::string render_generate_prompt(std::string_view item_attributes, std::string_view attribute_name,
                                   std::string_view attribute_prompt);

struct TransformExample {
  std::string name;
  std::string value;
};

std::string render_transform_prompt(std::string_view item_attributes, const TransformExample& example,
                                    std::string_view attribute_name, std::string_view attribute_value,
                                    std::string_view user_prompt);

}  // namespace malleable::synthesis

#pragma once

#include <string>

#include "malleable/synthesis/templates.hpp"

namespace malleable::synthesis {

/// A language-model backend answering the three prompt templates. Each call
/// is independent; implementations must be safe to call concurrently.
/// Returns the raw response text. Transport problems throw
/// Error(provider_failure).
class SynthesisProvider {
 public:
  virtual ~SynthesisProvider() = default;

  virtual std::string resolve_name(const std::string& user_prompt, const std::string& item_context) const = 0;

  virtual std::string generate_value(const std::string& attr_name, const std::string& attr_prompt,
                                     const std::string& item_context) const = 0;

  virtual std::string transform_value(const std::string& attr_name, const std::string& original_value,
                                      const std::string& user_prompt, const std::string& item_context,
                                      const TransformExample& example) const = 0;
};

}  // namespace malleable::synthesis

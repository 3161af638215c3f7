#pragma once

#include <chrono>
#include <string>

#include "malleable/synthesis/provider.hpp"

namespace malleable::synthesis {

struct HttpProviderConfig {
  /// http://host[:port][/path]; each call POSTs to this URL.
  std::string base_url;
  /// Name of the environment variable holding the bearer token; empty for none.
  std::string api_key_env;
  std::string model;
  std::chrono::seconds timeout{30};
};

/// Renders the prompt templates and sends one POST per call with body
/// {"model", "prompt"}; the answer is the response's "text" field.
class HttpProvider final : public SynthesisProvider {
 public:
  /// Throws Error(configuration) for an unsupported or malformed URL.
  explicit HttpProvider(HttpProviderConfig config);

  std::string resolve_name(const std::string& user_prompt, const std::string& item_context) const override;
  std::string generate_value(const std::string& attr_name, const std::string& attr_prompt,
                             const std::string& item_context) const override;
  std::string transform_value(const std::string& attr_name, const std::string& original_value,
                              const std::string& user_prompt, const std::string& item_context,
                              const TransformExample& example) const override;

  /// Sends an already-rendered prompt.
  std::string complete(const std::string& prompt) const;

 private:
  HttpProviderConfig config_;
  std::string host_;
  int port_ = 80;
  std::string path_;
};

}  // namespace malleable::synthesis

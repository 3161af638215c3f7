#pragma once

#include <atomic>
#include <functional>
#include <regex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "malleable/synthesis/provider.hpp"

namespace malleable::synthesis {

struct MockRequest {
  TemplateKind kind = TemplateKind::resolve_attribute;
  std::string attr_name;
  /// User prompt (resolve, transform) or attribute prompt (generate).
  std::string prompt;
  std::string original_value;
  nlohmann::json context;
  TransformExample example;
};

struct MockRule {
  TemplateKind kind = TemplateKind::resolve_attribute;
  /// Case-insensitive ECMAScript regex searched in the request prompt.
  std::string pattern;
  std::function<std::string(const MockRequest&)> respond;
};

/// Deterministic provider driven by an ordered rule table; the first rule
/// whose kind and pattern match answers. Unmatched requests get
/// "[Not Specified]".
class MockProvider final : public SynthesisProvider {
 public:
  /// Preloaded with worked_example_rules().
  MockProvider();
  explicit MockProvider(std::vector<MockRule> rules);

  /// Rules for the four worked examples (4k, height x length, minimum age,
  /// value) in both the resolve and generate templates, plus an identity
  /// transform for "keep it the same".
  static std::vector<MockRule> worked_example_rules();

  /// Response built from a template: ${ctx:Attribute} is the item's value,
  /// ${original} the value being transformed, ${prompt} and ${attr} the
  /// request fields.
  static MockRule templated(TemplateKind kind, std::string pattern, std::string response);

  /// [{"template": "resolve|generate|transform", "pattern": "...",
  ///   "response": "..."}] in templated() form. An optional
  /// "when": {"attr", "matches"} answers "response" only when the item's
  /// attribute matches the regex, "otherwise" (default "[Not Specified]")
  /// when it does not.
  static std::vector<MockRule> rules_from_json(const nlohmann::json& json);

  void add_rule(MockRule rule);

  std::string resolve_name(const std::string& user_prompt, const std::string& item_context) const override;
  std::string generate_value(const std::string& attr_name, const std::string& attr_prompt,
                             const std::string& item_context) const override;
  std::string transform_value(const std::string& attr_name, const std::string& original_value,
                              const std::string& user_prompt, const std::string& item_context,
                              const TransformExample& example) const override;

  std::size_t call_count() const noexcept { return calls_.load(); }

 private:
  struct CompiledRule {
    MockRule rule;
    std::regex regex;
  };

  std::string answer(const MockRequest& request) const;

  std::vector<CompiledRule> rules_;
  mutable std::atomic<std::size_t> calls_{0};
};

}  // namespace malleable::synthesis

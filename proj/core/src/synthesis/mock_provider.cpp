#include "malleable/synthesis/mock_provider.hpp"

#include "malleable/error.hpp"
#include "malleable/model/decimal.hpp"

namespace malleable::synthesis {
namespace {

using nlohmann::json;

constexpr const char* kNotSpecified = "[Not Specified]";

std::string context_field(const json& context, const std::string& name) {
  auto it = context.find(name);
  if (it == context.end()) return "Not Specified";
  if (it->is_string()) return it->get<std::string>();
  if (it->is_object() && it->contains("amount")) return (*it)["amount"].get<std::string>();
  return it->dump();
}

std::optional<model::Decimal> context_number(const json& context, const std::string& name) {
  auto it = context.find(name);
  if (it == context.end()) return std::nullopt;
  model::Decimal d;
  const std::string text = it->is_string() ? it->get<std::string>() : it->dump();
  if (!model::Decimal::try_parse(text, d)) return std::nullopt;
  return d;
}

json parse_context(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return json::object();
  }
}

// "3840x2160" style resolution, compared against 4K UHD.
std::string is_4k(const MockRequest& r) {
  auto it = r.context.find("Maximum Resolution");
  if (it == r.context.end() || !it->is_string()) return kNotSpecified;
  const std::string res = it->get<std::string>();
  const auto x = res.find_first_of("xX");
  if (x == std::string::npos) return kNotSpecified;
  model::Decimal w, h;
  if (!model::Decimal::try_parse(res.substr(0, x), w) || !model::Decimal::try_parse(res.substr(x + 1), h)) {
    return kNotSpecified;
  }
  return (w >= model::Decimal(3840) && h >= model::Decimal(2160)) ? "[Yes]" : "[No]";
}

std::string height_times_length(const MockRequest& r) {
  auto height = context_number(r.context, "Item Height");
  auto length = context_number(r.context, "Item Length");
  if (!height || !length) return kNotSpecified;
  return "[" + (*height * *length).to_string() + "]";
}

}  // namespace

MockProvider::MockProvider() : MockProvider(worked_example_rules()) {}

MockProvider::MockProvider(std::vector<MockRule> rules) {
  for (auto& r : rules) add_rule(std::move(r));
}

void MockProvider::add_rule(MockRule rule) {
  std::regex regex(rule.pattern, std::regex::ECMAScript | std::regex::icase);
  rules_.push_back({std::move(rule), std::move(regex)});
}

std::vector<MockRule> MockProvider::worked_example_rules() {
  using K = TemplateKind;
  auto constant = [](std::string answer) {
    return [answer = std::move(answer)](const MockRequest&) { return answer; };
  };
  return {
      {K::resolve_attribute, R"(\bis it 4k\b)", constant("[Is 4k]")},
      {K::resolve_attribute, R"(multiply the item height with the length)", constant("[Item Height x Length]")},
      {K::resolve_attribute, R"(at least how old is this monitor)", constant("[Approximate Minimum Age]")},
      {K::resolve_attribute, R"(what'?s the value of this monitor)", constant("[Value]")},
      {K::generate_value, R"(\bis it 4k\b)", is_4k},
      {K::generate_value, R"(multiply the item height with the length)", height_times_length},
      {K::generate_value, R"(at least how old is this monitor)", constant("[At least 2 Years]")},
      {K::generate_value, R"(what'?s the value of this monitor)", constant("[Medium Value]")},
      {K::transform_value, R"(keep it (the same|as is)|unchanged)",
       [](const MockRequest& r) { return "[" + r.original_value + "]"; }},
  };
}

MockRule MockProvider::templated(TemplateKind kind, std::string pattern, std::string response) {
  return {kind, std::move(pattern), [response = std::move(response)](const MockRequest& r) {
            std::map<std::string, std::string> vars{
                {"original", r.original_value}, {"prompt", r.prompt}, {"attr", r.attr_name}};
            if (r.context.is_object()) {
              for (const auto& [key, _] : r.context.items()) vars["ctx:" + key] = context_field(r.context, key);
            }
            // Unknown ctx:* placeholders mean the item lacks the attribute.
            std::string out = substitute(response, vars);
            if (out.find("${ctx:") != std::string::npos) return std::string(kNotSpecified);
            return out;
          }};
}

std::vector<MockRule> MockProvider::rules_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::configuration, "mock rules must be a JSON array");
  std::vector<MockRule> rules;
  for (const auto& entry : j) {
    const std::string kind = entry.value("template", "");
    TemplateKind k;
    if (kind == "resolve") {
      k = TemplateKind::resolve_attribute;
    } else if (kind == "generate") {
      k = TemplateKind::generate_value;
    } else if (kind == "transform") {
      k = TemplateKind::transform_value;
    } else {
      throw Error(ErrorCode::configuration, "mock rule has unknown template '" + kind + "'");
    }
    if (!entry.contains("pattern") || !entry.contains("response")) {
      throw Error(ErrorCode::configuration, "mock rule needs pattern and response: " + entry.dump());
    }
    auto rule = templated(k, entry["pattern"].get<std::string>(), entry["response"].get<std::string>());
    if (auto when = entry.find("when"); when != entry.end()) {
      if (!when->is_object() || !when->contains("attr") || !when->contains("matches")) {
        throw Error(ErrorCode::configuration, "mock rule 'when' needs attr and matches: " + entry.dump());
      }
      const auto otherwise = templated(k, rule.pattern, entry.value("otherwise", std::string(kNotSpecified)));
      std::regex condition((*when)["matches"].get<std::string>(), std::regex::ECMAScript | std::regex::icase);
      rule.respond = [attr = (*when)["attr"].get<std::string>(), condition, then = rule.respond,
                      otherwise = otherwise.respond](const MockRequest& r) {
        if (!r.context.is_object() || !r.context.contains(attr)) return std::string(kNotSpecified);
        return std::regex_search(context_field(r.context, attr), condition) ? then(r) : otherwise(r);
      };
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::string MockProvider::answer(const MockRequest& request) const {
  ++calls_;
  for (const auto& compiled : rules_) {
    if (compiled.rule.kind == request.kind && std::regex_search(request.prompt, compiled.regex)) {
      return compiled.rule.respond(request);
    }
  }
  return kNotSpecified;
}

std::string MockProvider::resolve_name(const std::string& user_prompt, const std::string& item_context) const {
  MockRequest r;
  r.kind = TemplateKind::resolve_attribute;
  r.prompt = user_prompt;
  r.context = parse_context(item_context);
  return answer(r);
}

std::string MockProvider::generate_value(const std::string& attr_name, const std::string& attr_prompt,
                                         const std::string& item_context) const {
  MockRequest r;
  r.kind = TemplateKind::generate_value;
  r.attr_name = attr_name;
  r.prompt = attr_prompt;
  r.context = parse_context(item_context);
  return answer(r);
}

std::string MockProvider::transform_value(const std::string& attr_name, const std::string& original_value,
                                          const std::string& user_prompt, const std::string& item_context,
                                          const TransformExample& example) const {
  MockRequest r;
  r.kind = TemplateKind::transform_value;
  r.attr_name = attr_name;
  r.prompt = user_prompt;
  r.original_value = original_value;
  r.context = parse_context(item_context);
  r.example = example;
  return answer(r);
}

}  // namespace malleable::synthesis

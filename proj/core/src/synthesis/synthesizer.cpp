#include "malleable/synthesis/synthesizer.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <optional>
#include <thread>

#include "malleable/error.hpp"
#include "malleable/query/render.hpp"
#include "malleable/synthesis/bracket.hpp"
#include "malleable/synthesis/inference.hpp"
#include "malleable/synthesis/templates.hpp"

namespace malleable::synthesis {

using model::AttributeDescriptor;
using model::AttributeValue;
using model::Collection;
using model::ItemId;

std::string match_key(std::string_view name) {
  std::string key;
  for (unsigned char c : name) {
    if (std::isalnum(c)) key.push_back(static_cast<char>(std::tolower(c)));
  }
  return key;
}

namespace {

void run_parallel(std::size_t count, std::size_t max_parallel, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min(count, std::max<std::size_t>(max_parallel, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& t : threads) t.join();
}

struct Attempt {
  std::optional<std::string> extracted;
  std::string failure;
};

Attempt call_with_retries(int max_retries, const std::function<std::string()>& call) {
  Attempt result;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    try {
      result.extracted = parse_bracket(call());
      return result;
    } catch (const Error& e) {
      result.failure = std::string(to_string(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      result.failure = std::string("provider-failure: ") + e.what();
    }
  }
  return result;
}

const AttributeDescriptor* match_existing(const Collection& collection, std::string_view name) {
  const auto key = match_key(name);
  if (key.empty()) return nullptr;
  for (const auto& descriptor : collection.schema()) {
    if (match_key(descriptor.id) == key || match_key(descriptor.display_name) == key) return &descriptor;
  }
  return nullptr;
}

std::vector<const AttributeDescriptor*> match_list(const Collection& collection, std::string_view answer) {
  std::vector<const AttributeDescriptor*> matched;
  std::size_t start = 0;
  while (start <= answer.size()) {
    auto comma = answer.find(',', start);
    if (comma == std::string_view::npos) comma = answer.size();
    const auto* descriptor = match_existing(collection, answer.substr(start, comma - start));
    if (!descriptor) return {};
    if (std::find(matched.begin(), matched.end(), descriptor) == matched.end()) matched.push_back(descriptor);
    start = comma + 1;
  }
  return matched;
}

/// Settles the outcome descriptor's kind from the values it will hold.
void unify_kind(SynthesisOutcome& outcome) {
  std::optional<model::ValueKind> common;
  bool mixed = false;
  for (const auto& [id, value] : outcome.values) {
    if (model::is_not_specified(value)) continue;
    const auto kind = model::kind_of(value);
    if (!common) common = kind;
    else if (*common != kind) mixed = true;
  }
  if (!common) {
    outcome.descriptor.value_kind = model::ValueKind::text;
    return;
  }
  if (!mixed) {
    outcome.descriptor.value_kind = *common;
    if (*common == model::ValueKind::money) {
      for (const auto& [id, value] : outcome.values) {
        if (const auto* money = std::get_if<model::Money>(&value)) {
          outcome.descriptor.currency = money->currency;
          break;
        }
      }
    }
    return;
  }
  outcome.descriptor.value_kind = model::ValueKind::text;
  outcome.descriptor.currency.reset();
  for (auto& [id, value] : outcome.values) {
    if (!model::is_not_specified(value) && model::kind_of(value) != model::ValueKind::text) {
      value = model::Text{query::render_value(value)};
    }
  }
}

std::vector<const model::Item*> lookup_items(const Collection& collection, const std::vector<ItemId>& ids) {
  std::vector<const model::Item*> items;
  items.reserve(ids.size());
  for (const auto& id : ids) {
    const auto* item = &collection.item(id);
    if (std::find(items.begin(), items.end(), item) == items.end()) items.push_back(item);
  }
  return items;
}

}  // namespace

Synthesizer::Synthesizer(const SynthesisProvider& provider, SynthesisOptions options)
    : provider_(provider), options_(options) {}

Resolution Synthesizer::resolve(const Collection& collection, const std::string& user_prompt) const {
  if (user_prompt.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw Error(ErrorCode::invalid_argument, "prompt must not be empty");
  }
  const std::string context =
      collection.items().empty() ? std::string("{}") : serialize_item_context(collection.items().front());
  const auto attempt = call_with_retries(options_.max_retries,
                                         [&] { return provider_.resolve_name(user_prompt, context); });
  if (!attempt.extracted) throw Error(ErrorCode::unparseable_response, attempt.failure);
  const std::string& answer = *attempt.extracted;

  Resolution resolution;
  if (const auto* existing = match_existing(collection, answer)) {
    resolution.descriptors.push_back(*existing);
    return resolution;
  }
  if (answer.find(',') != std::string::npos) {
    const auto listed = match_list(collection, answer);
    if (!listed.empty()) {
      for (const auto* descriptor : listed) resolution.descriptors.push_back(*descriptor);
      return resolution;
    }
  }
  const auto name = model::normalize_attribute_name(answer);
  if (name.empty()) throw Error(ErrorCode::unparseable_response, "provider returned an empty attribute name");
  AttributeDescriptor created;
  created.id = name;
  created.display_name = name;
  created.origin = model::Origin::synthesized;
  created.prompt = user_prompt;
  resolution.descriptors.push_back(std::move(created));
  resolution.created = true;
  return resolution;
}

AttributeDescriptor Synthesizer::resolve_or_generate_attribute(const Collection& collection,
                                                               const std::string& user_prompt) const {
  return resolve(collection, user_prompt).descriptors.front();
}

SynthesisOutcome Synthesizer::generate_values(const Collection& collection, const AttributeDescriptor& descriptor,
                                              const std::vector<ItemId>& ids) const {
  if (!descriptor.prompt) {
    throw Error(ErrorCode::invalid_argument, "attribute '" + descriptor.id + "' has no prompt to generate from");
  }
  const auto items = lookup_items(collection, ids);
  std::vector<Attempt> attempts(items.size());
  run_parallel(items.size(), options_.max_parallel, [&](std::size_t i) {
    const auto context = serialize_item_context(*items[i]);
    attempts[i] = call_with_retries(options_.max_retries, [&] {
      return provider_.generate_value(descriptor.display_name, *descriptor.prompt, context);
    });
  });

  SynthesisOutcome outcome;
  outcome.descriptor = descriptor;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (attempts[i].extracted) outcome.values.emplace(items[i]->item_id, infer_value(*attempts[i].extracted));
    else outcome.failures.emplace(items[i]->item_id, attempts[i].failure);
  }
  if (descriptor.origin != model::Origin::source) unify_kind(outcome);
  return outcome;
}

SynthesisOutcome Synthesizer::transform_values(const Collection& collection, const model::AttributeId& attr,
                                               const std::string& user_prompt,
                                               const std::vector<ItemId>& ids) const {
  const auto& source = collection.attribute(attr);
  if (ids.empty()) throw Error(ErrorCode::invalid_argument, "transform needs at least one item");
  const auto items = lookup_items(collection, ids);

  std::vector<AttributeValue> originals;
  std::vector<std::string> rendered;
  originals.reserve(items.size());
  for (const auto* item : items) {
    originals.push_back(collection.get_value(*item, attr));
    rendered.push_back(query::render_value(originals.back()));
  }

  auto transform = [&](std::size_t i, const TransformExample& example) {
    const auto context = serialize_item_context(*items[i]);
    return call_with_retries(options_.max_retries, [&] {
      return provider_.transform_value(source.display_name, rendered[i], user_prompt, context, example);
    });
  };

  std::vector<Attempt> attempts(items.size());
  attempts[0] = transform(0, TransformExample{source.display_name, rendered[0]});
  const TransformExample example{source.display_name,
                                 attempts[0].extracted ? *attempts[0].extracted : rendered[0]};
  run_parallel(items.size() - 1, options_.max_parallel,
               [&](std::size_t i) { attempts[i + 1] = transform(i + 1, example); });

  SynthesisOutcome outcome;
  outcome.descriptor.id = source.id + " (reformatted)";
  outcome.descriptor.display_name = source.display_name + " (reformatted)";
  outcome.descriptor.origin = model::Origin::derived;
  outcome.descriptor.source_attributes = {source.id};
  outcome.descriptor.prompt = user_prompt;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& id = items[i]->item_id;
    if (!attempts[i].extracted) {
      outcome.failures.emplace(id, attempts[i].failure);
    } else if (*attempts[i].extracted == rendered[i]) {
      outcome.values.emplace(id, originals[i]);
    } else {
      outcome.values.emplace(id, infer_value(*attempts[i].extracted));
    }
  }
  unify_kind(outcome);
  return outcome;
}

SynthesisOutcome Synthesizer::autofill_missing(const Collection& collection, const model::AttributeId& attr) const {
  const auto& descriptor = collection.attribute(attr);
  std::vector<ItemId> missing;
  for (const auto& item : collection.items()) {
    if (model::is_not_specified(collection.get_value(item, attr))) missing.push_back(item.item_id);
  }
  SynthesisOutcome outcome;
  outcome.descriptor = descriptor;
  if (missing.empty()) return outcome;

  auto request = descriptor;
  if (!request.prompt) request.prompt = "What is the " + descriptor.display_name + " of this item?";
  auto generated = generate_values(collection, request, missing);
  for (auto& [id, value] : generated.values) {
    if (!model::is_not_specified(value) && model::kind_of(value) != descriptor.value_kind) {
      value = descriptor.value_kind == model::ValueKind::text ? AttributeValue{model::Text{query::render_value(value)}}
                                                              : AttributeValue{model::NotSpecified{}};
    }
    outcome.values.emplace(id, std::move(value));
  }
  for (const auto& [id, reason] : generated.failures) outcome.values.emplace(id, model::NotSpecified{});
  return outcome;
}

}  // namespace malleable::synthesis

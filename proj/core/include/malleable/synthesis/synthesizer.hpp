#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "malleable/model/collection.hpp"
#include "malleable/synthesis/provider.hpp"

namespace malleable::synthesis {

struct SynthesisOptions {
  /// Upper bound on concurrent provider calls.
  std::size_t max_parallel = 8;
  /// Extra attempts after an unparseable response or transport failure.
  int max_retries = 2;
};

struct SynthesisOutcome {
  model::AttributeDescriptor descriptor;
  std::map<model::ItemId, model::AttributeValue> values;
  std::map<model::ItemId, std::string> failures;
};

struct Resolution {
  /// One entry normally; several when the answer lists existing attributes.
  std::vector<model::AttributeDescriptor> descriptors;
  /// True when descriptors.front() is a new synthesized attribute.
  bool created = false;
};

class Synthesizer {
 public:
  explicit Synthesizer(const SynthesisProvider& provider, SynthesisOptions options = {});

  /// Asks the provider for an attribute name using the first item as the
  /// sample context. Errors: invalid_argument for an empty prompt,
  /// unparseable_response once retries are exhausted.
  Resolution resolve(const model::Collection& collection, const std::string& user_prompt) const;

  model::AttributeDescriptor resolve_or_generate_attribute(const model::Collection& collection,
                                                           const std::string& user_prompt) const;

  /// One call per item. The returned descriptor's value_kind is the common
  /// kind of the values (text when they disagree; disagreeing values are
  /// rendered to text).
  SynthesisOutcome generate_values(const model::Collection& collection, const model::AttributeDescriptor& descriptor,
                                   const std::vector<model::ItemId>& items) const;

  /// Results go to a new derived attribute "<attr> (reformatted)". The first
  /// item's answer becomes the worked example for the others.
  SynthesisOutcome transform_values(const model::Collection& collection, const model::AttributeId& attr,
                                    const std::string& user_prompt, const std::vector<model::ItemId>& items) const;

  /// Fills only items whose value is missing; failures become NotSpecified.
  SynthesisOutcome autofill_missing(const model::Collection& collection, const model::AttributeId& attr) const;

 private:
  const SynthesisProvider& provider_;
  SynthesisOptions options_;
};

/// Key used to match provider answers against attribute ids and names:
/// lower-case letters and digits only.
std::string match_key(std::string_view name);

}  // namespace malleable::synthesis

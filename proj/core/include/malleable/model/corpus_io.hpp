#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "malleable/model/collection.hpp"

namespace malleable::model {

/// Plain wire form of a value as it appears in corpus files and API rows:
/// Money as {"amount","currency"}, dates as ISO strings, NotSpecified as
/// the string "Not Specified".
nlohmann::json value_to_json(const AttributeValue& value);

/// Decodes a plain value against its descriptor. Throws
/// Error(schema_violation) when the JSON does not fit the declared kind.
AttributeValue value_from_json(const nlohmann::json& json, const AttributeDescriptor& descriptor);

nlohmann::json descriptor_to_json(const AttributeDescriptor& descriptor);
AttributeDescriptor descriptor_from_json(const nlohmann::json& json);

/// Parses a corpus document. Errors: malformed_document (syntax or
/// structure), schema_violation, duplicate_item_id.
Collection ingest_corpus(std::string_view document);
Collection collection_from_json(const nlohmann::json& document);
nlohmann::json collection_to_json(const Collection& collection);

/// Reads and ingests a corpus file. Errors as above plus
/// Error(configuration) when the file cannot be read.
Collection load_corpus_file(const std::string& path);

}  // namespace malleable::model

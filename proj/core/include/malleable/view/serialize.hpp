#pragma once

#include <cstdint>
#include <functional>

#include <nlohmann/json.hpp>

#include "malleable/view/graph.hpp"

namespace malleable::view {

/// Decodes a value appearing inside a filter. Event payloads use the tagged
/// form; API requests decode plain values against the attribute descriptor.
using ValueDecoder = std::function<model::AttributeValue(const nlohmann::json&)>;

nlohmann::json layout_to_json(const OverviewLayout& layout);
OverviewLayout layout_from_json(const nlohmann::json& json);

nlohmann::json sort_to_json(const std::optional<SortSpec>& sort);
std::optional<SortSpec> sort_from_json(const nlohmann::json& json);

nlohmann::json predicate_to_json(const Predicate& predicate);
Predicate predicate_from_json(const nlohmann::json& json, const ValueDecoder& decode);

nlohmann::json filter_to_json(const FilterSpec& filter);
FilterSpec filter_from_json(const nlohmann::json& json);
FilterSpec filter_from_json(const nlohmann::json& json, const ValueDecoder& decode);

nlohmann::json node_to_json(const ViewNode& node);
ViewNode node_from_json(const nlohmann::json& json);

nlohmann::json synthesized_to_json(const SynthesizedAttribute& attribute);
SynthesizedAttribute synthesized_from_json(const nlohmann::json& json);

/// Canonical form: object keys sorted, nodes in creation order.
nlohmann::json graph_to_json(const ViewGraph& graph);
ViewGraph graph_from_json(const nlohmann::json& json);

/// FNV-1a 64 over the canonical JSON dump; stable across runs and platforms.
std::uint64_t graph_hash(const ViewGraph& graph);

}  // namespace malleable::view

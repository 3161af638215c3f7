#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "malleable/view/catalog.hpp"
#include "malleable/view/graph.hpp"

namespace malleable::service {

/// Default surfaced attributes the shopping and booking corpora ship with.
extern const std::vector<std::string> kShoppingDefaults;
extern const std::vector<std::string> kBookingDefaults;

/// "shopping-default", "booking-default" and "default".
std::vector<std::string> preset_names();

/// Initial graph for a new session. "default" gives every catalog
/// collection a list overview linked to a detail view. Named presets need
/// their corpus in the catalog. Throws Error(configuration) for an unknown
/// preset or missing corpus; schema mismatches surface as the usual
/// validation errors.
view::ViewGraph build_preset(const view::Catalog& catalog, std::string_view name);

/// Defaults to register with the catalog for a loaded corpus: the known
/// shopping or booking defaults when they fit the schema, otherwise the
/// first few schema attributes.
std::vector<std::string> default_surfaced_for(const model::Collection& collection);

}  // namespace malleable::service

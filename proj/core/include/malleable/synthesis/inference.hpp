#pragma once

#include <string_view>

#include "malleable/model/value.hpp"

namespace malleable::synthesis {

/// Types an extracted answer. Total: "Not Specified" (any case) becomes
/// NotSpecified; Yes/No/True/False become Boolean; plain decimals Number;
/// currency-marked amounts Money; ISO dates Date; #rrggbb Color; anything
/// else Text.
model::AttributeValue infer_value(std::string_view extracted);

}  // namespace malleable::synthesis

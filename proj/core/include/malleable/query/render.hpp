#pragma once

#include <cstddef>
#include <string>

#include "malleable/model/value.hpp"

namespace malleable::query {

/// Canonical single-line display form. Fixed table:
///   Money    USD "$39.99", EUR "€39.99", GBP "£39.99", JPY "¥40",
///            other codes "39.99 CHF" (two fractional digits)
///   Boolean  "Yes" / "No"
///   ImageRef "1 image" / "N images"
///   Component kind, plus " (on)"/" (off)" when it has a boolean facet
///   Color    "#rrggbb"
///   NotSpecified "Not Specified"
std::string render_value(const model::AttributeValue& value);

struct Truncated {
  std::string display;
  bool truncated = false;

  friend bool operator==(const Truncated&, const Truncated&) = default;
};

/// Text longer than `budget` code points is cut at the last word boundary so
/// that the result, including the trailing "…", fits in `budget`. Every other
/// kind renders canonically and is never cut. Throws Error(invalid_argument)
/// when budget is 0.
Truncated truncate_for_overview(const model::AttributeValue& value, std::size_t budget);

/// Number of UTF-8 code points in `text`.
std::size_t utf8_length(std::string_view text);

}  // namespace malleable::query

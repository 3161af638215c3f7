#pragma once

#include <string>
#include <string_view>

namespace malleable::synthesis {

struct BracketResponse {
  std::string raw;
  std::string extracted;
};

/// Interior of the first balanced [...] pair in `raw`, trimmed. Nested
/// brackets stay part of the interior. Throws Error(unparseable_response).
std::string parse_bracket(std::string_view raw);

BracketResponse parse_response(std::string raw);

}  // namespace malleable::synthesis

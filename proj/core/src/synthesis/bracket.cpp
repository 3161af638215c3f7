#include "malleable/synthesis/bracket.hpp"

#include <cctype>

#include "malleable/error.hpp"

namespace malleable::synthesis {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string parse_bracket(std::string_view raw) {
  for (std::size_t open = raw.find('['); open != std::string_view::npos; open = raw.find('[', open + 1)) {
    int depth = 0;
    for (std::size_t i = open; i < raw.size(); ++i) {
      if (raw[i] == '[') {
        ++depth;
      } else if (raw[i] == ']' && --depth == 0) {
        return std::string(trim(raw.substr(open + 1, i - open - 1)));
      }
    }
  }
  std::string preview(raw.substr(0, 120));
  throw Error(ErrorCode::unparseable_response, "no bracketed answer in response: '" + preview + "'");
}

BracketResponse parse_response(std::string raw) {
  std::string extracted = parse_bracket(raw);
  return {std::move(raw), std::move(extracted)};
}

}  // namespace malleable::synthesis

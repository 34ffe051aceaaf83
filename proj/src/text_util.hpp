#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pnog::detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

// Splits text into non-empty lines of whitespace-separated tokens. `#` starts
// a comment unless it appears inside a double-quoted token; quoted tokens are
// returned with their quotes. Throws SyntaxError on an unterminated quote.
std::vector<Line> split_lines(std::string_view text);

bool is_quoted(std::string_view token);
std::string unquote(std::string_view token);

}  // namespace pnog::detail

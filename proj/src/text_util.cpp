#include "text_util.hpp"

#include <cctype>

#include "pnog/error.hpp"

namespace pnog::detail {

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;

    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      char ch = raw[pos];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos;
      } else if (ch == '#') {
        break;
      } else if (ch == '"') {
        std::size_t close = raw.find('"', pos + 1);
        if (close == std::string_view::npos)
          throw Error(ErrorKind::SyntaxError, "unterminated quoted string", number);
        line.tokens.emplace_back(raw.substr(pos, close - pos + 1));
        pos = close + 1;
      } else {
        std::size_t from = pos;
        while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos])) &&
               raw[pos] != '#' && raw[pos] != '"')
          ++pos;
        line.tokens.emplace_back(raw.substr(from, pos - from));
      }
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

bool is_quoted(std::string_view token) {
  return token.size() >= 2 && token.front() == '"' && token.back() == '"';
}

std::string unquote(std::string_view token) {
  return std::string(token.substr(1, token.size() - 2));
}

}  // namespace pnog::detail

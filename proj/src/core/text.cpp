#include "cellres/core/text.hpp"

#include <charconv>
#include <sstream>

#include "cellres/error.hpp"

namespace cellres::core {

std::vector<TokenLine> read_token_lines(std::istream& in) {
  std::vector<TokenLine> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

long parse_long(const std::string& token, std::size_t line) {
  long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line, "expected an integer, found '" + token + "'");
  }
  return value;
}

}  // namespace cellres::core

#ifndef CELLRES_CORE_TEXT_HPP
#define CELLRES_CORE_TEXT_HPP

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace cellres::core {

/// A non-blank, non-comment input line split on whitespace.
struct TokenLine {
  std::size_t number;  // 1-based
  std::vector<std::string> tokens;
};

/// Splits a stream into token lines, skipping blank lines and lines whose
/// first non-space character is '#'.
std::vector<TokenLine> read_token_lines(std::istream& in);

/// Parses a decimal integer token or throws ParseError at `line`.
long parse_long(const std::string& token, std::size_t line);

}  // namespace cellres::core

#endif  // CELLRES_CORE_TEXT_HPP

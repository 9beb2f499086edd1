#pragma once

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "specbound/errors.hpp"

// Line-oriented parsing helpers shared by the tensor and hypergraph readers.
namespace specbound::detail {

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string &msg) {
  throw InputError("line " + std::to_string(line_no) + ": " + msg);
}

// Strips comments, splits into whitespace-separated tokens.
inline std::vector<std::string> tokenize(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok)
    tokens.push_back(tok);
  return tokens;
}

inline long parse_int(const std::string &tok, std::size_t line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    parse_fail(line_no, "expected an integer, got '" + tok + "'");
  return value;
}

// strtod accepts the same forms the formatter emits. The process stays in
// the default "C" locale (setlocale is never called), so '.' is always the
// radix point.
inline double parse_value(const std::string &tok, std::size_t line_no) {
  char *end = nullptr;
  double value = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || !std::isfinite(value))
    parse_fail(line_no, "expected a finite decimal value, got '" + tok + "'");
  return value;
}

} // namespace specbound::detail

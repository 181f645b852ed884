#pragma once

// Internal helpers for the "head:key=value,key=value" specifier grammar used
// by --domain and --seq. Errors always name the offending token.

#include <string>
#include <utility>
#include <vector>

#include "widthslab/errors.hpp"
#include "widthslab/numeric.hpp"

namespace widthslab::detail {

struct SpecifierParts {
  std::string head;
  std::vector<std::pair<std::string, std::string>> params;
};

inline SpecifierParts split_specifier(const std::string& text) {
  SpecifierParts out;
  auto colon = text.find(':');
  out.head = text.substr(0, colon);
  if (out.head.empty()) throw parse_error("empty specifier", text);
  if (colon == std::string::npos) return out;
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw parse_error("expected key=value", item.empty() ? text : item);
    out.params.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline int parse_int_token(const std::string& value, const std::string& token) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used != value.size()) throw parse_error("trailing characters in integer", token);
    return v;
  } catch (const parse_error&) {
    throw;
  } catch (...) {
    throw parse_error("not an integer", token);
  }
}

inline Real parse_real_token(const std::string& value, const std::string& token) {
  try {
    // Real's string constructor accepts full-precision decimal input.
    return Real(value);
  } catch (...) {
    throw parse_error("not a number", token);
  }
}

}  // namespace widthslab::detail

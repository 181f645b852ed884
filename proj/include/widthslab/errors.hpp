#pragma once

#include <stdexcept>
#include <string>

namespace widthslab {

// Numeric-domain violation: a parameter is outside the mathematical domain
// of the operation (d too small, n = 0, eps <= 0, ...).
class parameter_error : public std::invalid_argument {
public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// A specifier string (sequence, domain, epsilon, range) failed to parse.
// `token` carries the offending piece for diagnostics.
class parse_error : public std::invalid_argument {
public:
  parse_error(const std::string& what, std::string token)
      : std::invalid_argument(what), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

private:
  std::string token_;
};

// The (family, operation) pair has no defined answer, e.g. a strong
// equivalence limit for gevrey alpha >= 1.
class unsupported_error : public std::logic_error {
public:
  explicit unsupported_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace widthslab

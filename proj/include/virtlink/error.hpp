#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace virtlink {

/// Malformed textual input. Carries the offending line (1-based) and token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::string token, std::string file = {});

  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }
  const std::string& file() const noexcept { return file_; }
  const std::string& reason() const noexcept { return reason_; }

  ParseError with_file(const std::string& file) const;

 private:
  std::string reason_;
  std::size_t line_;
  std::string token_;
  std::string file_;
};

/// Arithmetic between polynomials tagged with different variable pairs.
class VarPairMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// exact_div called on a pair where the divisor does not divide.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A diagram violating strand-count or orientation consistency.
class InvalidDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace virtlink

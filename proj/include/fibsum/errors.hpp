#pragma once

#include <stdexcept>
#include <string>

namespace fibsum {

/// Arithmetic preconditions (division by zero, index underflow, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed value or config text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown catalog/identity id.
class UnknownIdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fibsum

#pragma once

#include <stdexcept>
#include <string>

namespace sags {

// Thrown by field division/inversion with a zero divisor.
class division_by_zero : public std::domain_error {
 public:
  division_by_zero() : std::domain_error("division by zero in finite field") {}
};

// Thrown when an enumeration would exceed its configured size guard.
class guard_exceeded : public std::runtime_error {
 public:
  explicit guard_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed textual input (descriptors, matrices, spec files, words).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sags

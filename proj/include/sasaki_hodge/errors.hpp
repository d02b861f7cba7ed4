#pragma once

#include <stdexcept>
#include <string>

namespace sasaki {

// Raised when an input violates an operation's precondition (wrong ambient,
// unsupported dimension, non-coprime moduli, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when an exact identity that must hold fails: an inexact division,
// a Noether/Todd divisibility, or disagreement between two computation routes.
class IntegrityError : public std::logic_error {
 public:
  explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sasaki

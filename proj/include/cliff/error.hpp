#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliff {

/// Operands live in algebras (or polynomial spaces) of different dimension.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's precondition does not hold for the given input
/// (wrong degree, non-homogeneous, not harmonic, mixed grade, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Broken internal invariant; never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text did not conform to the polynomial grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cliff

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blindsat {

// Base of every error thrown by the library. The CLI maps the concrete
// subclass onto its exit status.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed formula / order / DIMACS text.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at column " + std::to_string(position + 1)),
        position_(position) {}

  /// Zero-based byte offset of the offending character.
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// A precondition on a value was violated (missing atom, index out of range,
// even exponent, empty row set, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// The request is well formed but would exceed a configured capacity cap.
class CapacityError : public Error {
public:
  using Error::Error;
};

}  // namespace blindsat

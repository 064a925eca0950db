#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace enriques {

// Base class for everything this library throws on bad input.  Internal
// invariant violations (bugs) use std::logic_error instead, so callers can
// tell "you gave me garbage" from "the library is broken".
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mathematically meaningless request: n < 3, pi(3), non-coprime torus knot...
struct DomainError : Error {
  using Error::Error;
};

// Symbol index outside 2..n-2 for the given complexity.
struct IndexError : Error {
  using Error::Error;
};

// A symbol set that is not the code of any diagram.  `symbol` names the
// offending vertex (or duplicate) that broke the closure condition.
struct ValidityError : Error {
  std::string symbol;
  ValidityError(const std::string& what, std::string offending)
      : Error(what), symbol(std::move(offending)) {}
};

// Text that does not match the diagram grammar.  `offset` is the byte
// position of the first offending character.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t at)
      : Error(what + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};

// Operator applied where its precondition does not hold.
struct OperatorError : Error {
  using Error::Error;
};

// Request exceeds a configured size bound (e.g. Hasse graph for huge n).
struct ResourceError : Error {
  using Error::Error;
};

}  // namespace enriques

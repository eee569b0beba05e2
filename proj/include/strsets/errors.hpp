#pragma once

#include <stdexcept>
#include <string>

namespace strsets {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input is not a set code. `clause` names the first violated grammar clause
// (e.g. "no envelope", "marker ladder broken", "duplicate element").
struct NotASetCode : Error {
  std::string clause;
  explicit NotASetCode(std::string clause_, const std::string& what_arg)
      : Error(what_arg), clause(std::move(clause_)) {}
};

struct NotMinSet : Error {
  using Error::Error;
};

struct NotSetStar : Error {
  using Error::Error;
};

struct NotInternalFrame : Error {
  using Error::Error;
};

struct DecompositionMismatch : Error {
  using Error::Error;
};

struct EqualInputs : Error {
  using Error::Error;
};

struct UnknownProperty : Error {
  using Error::Error;
};

struct BoundTooLarge : Error {
  using Error::Error;
};

}  // namespace strsets

#pragma once

#include <stdexcept>
#include <string>

namespace redih {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-scale input. The CLI maps this to exit code 2.
struct InputError : Error {
  using Error::Error;
};

// An internal consistency check failed; indicates a bug or corrupted
// intermediate data. The CLI maps this to exit code 4.
struct InvariantError : Error {
  using Error::Error;
};

// A polytope failed one of the two admissibility conditions. Not an
// internal error; the CLI maps it to exit code 3.
struct NotAdmissible : Error {
  int condition;  // 1 = interior misses the dominant chamber, 2 = translates overlap
  explicit NotAdmissible(const std::string& what, int cond)
      : Error(what), condition(cond) {}
};

struct NonDivisible : InvariantError {
  using InvariantError::InvariantError;
};

struct InvalidCartan : InputError {
  using InputError::InputError;
};

struct DependentRoots : InputError {
  using InputError::InputError;
};

struct OrderExceeded : InputError {
  using InputError::InputError;
};

struct NoLatticePoint : InputError {
  using InputError::InputError;
};

struct NotEulerian : InputError {
  using InputError::InputError;
};

struct NotPointed : InvariantError {
  using InvariantError::InvariantError;
};

struct NotPositive : InvariantError {
  using InvariantError::InvariantError;
};

struct NonParabolicSymmetry : InvariantError {
  using InvariantError::InvariantError;
};

struct LinkNotAdmissible : InvariantError {
  using InvariantError::InvariantError;
};

struct DegreeMismatch : InvariantError {
  using InvariantError::InvariantError;
};

}  // namespace redih

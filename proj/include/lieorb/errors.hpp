#pragma once

#include <stdexcept>
#include <string>

namespace lieorb {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct AmbientMismatch : Error {
  using Error::Error;
};

struct NotContained : Error {
  using Error::Error;
};

/// Antisymmetry data conflict: both [i,j] and [j,i] given inconsistently.
struct AntisymmetryConflict : Error {
  using Error::Error;
};

/// Jacobi identity fails; carries the offending basis triple.
struct JacobiViolation : Error {
  std::size_t i, j, k;
  JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_, const std::string& what)
      : Error(what), i(i_), j(j_), k(k_) {}
};

struct NotAnIdeal : Error {
  using Error::Error;
};

struct NotASubalgebra : Error {
  using Error::Error;
};

struct NotARepresentation : Error {
  using Error::Error;
};

struct NotACocycle : Error {
  using Error::Error;
};

struct NotAnExtension : Error {
  using Error::Error;
};

struct FactorizationFailure : Error {
  using Error::Error;
};

struct IdealityViolation : Error {
  using Error::Error;
};

struct UnknownName : Error {
  using Error::Error;
};

/// Two routes to the same quantity disagreed on a sampled witness.
struct GenericityDisagreement : Error {
  long lhs, rhs;
  GenericityDisagreement(long lhs_, long rhs_, const std::string& what)
      : Error(what), lhs(lhs_), rhs(rhs_) {}
};

/// Seeded witness search exhausted its retry budget.
struct WitnessNotFound : Error {
  using Error::Error;
};

struct AssertionFailed : Error {
  using Error::Error;
};

}  // namespace lieorb

// Error types thrown by the library.  Every failure mode has its own type so
// callers can map them to exit codes or test expectations without string
// matching.  All derive from Error, which carries the message.
#pragma once

#include <stdexcept>
#include <string>

namespace mazurlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input claimed Hermitian but is not, beyond tolerance.
struct NotHermitianError : Error {
  using Error::Error;
};

// Iterative eigensolver exhausted its sweep budget.
struct NoConvergenceError : Error {
  using Error::Error;
};

// Input required to be positive semidefinite has a genuinely negative
// eigenvalue (below the clamping band).
struct NotPositiveError : Error {
  using Error::Error;
};

// Parameter outside its admissible range (exponents, quadrature settings,
// norm indices, ball constraints).
struct DomainError : Error {
  using Error::Error;
};

// Two elements live on different algebra shapes.
struct ShapeMismatchError : Error {
  using Error::Error;
};

// Exponent arithmetic does not balance (Holder triples).
struct ExponentMismatchError : Error {
  using Error::Error;
};

// Matrix too close to singular for the requested resolvent route.
struct IllConditionedError : Error {
  using Error::Error;
};

// Conjugation family fails its normalization identity.
struct NotNormalizedError : Error {
  using Error::Error;
};

// Pair too close together to define a ratio.
struct DegeneratePairError : Error {
  using Error::Error;
};

// Bad run configuration (empty grids, zero trials, unknown names).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace mazurlab

#pragma once

#include <stdexcept>
#include <string>

namespace hyperpoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input lies off the hyperboloid model (e.g. arccosh argument below 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Coincident points or a construction that collapses.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Poincare coordinate on or beyond the ideal boundary.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

/// Two quantities that must be strictly ordered are equal within tolerance.
class TieError : public Error {
 public:
  using Error::Error;
};

/// Evolute could not be built (a triple without a circumcircle slipped in).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class ExhaustionError : public Error {
 public:
  using Error::Error;
};

/// A polygon failed an admissibility check required by the caller.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperpoly

#pragma once

#include <stdexcept>
#include <string>

namespace aek {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors that come from numerics (tolerances, extrapolation, integrability).
/// The CLI maps these to exit code 1.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Bad input: malformed JSON, unknown expression nodes, invalid arguments.
/// The CLI maps these to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A closed-form expression left its domain (log of a non-positive value, ...).
class EvaluationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Adaptive quadrature did not reach its tolerance within max_depth.
class ToleranceFailure : public NumericalError {
 public:
  ToleranceFailure(const std::string& what, double worst_a, double worst_b)
      : NumericalError(what), worst_a_(worst_a), worst_b_(worst_b) {}
  double worst_a() const { return worst_a_; }
  double worst_b() const { return worst_b_; }

 private:
  double worst_a_;
  double worst_b_;
};

/// The Hermitian form of a profile is not positive definite at a point.
class NotKaehlerHere : public NumericalError {
 public:
  NotKaehlerHere(const std::string& what, double s) : NumericalError(what), s_(s) {}
  double s() const { return s_; }

 private:
  double s_;
};

class ExactlyFlat : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ExtrapolationUnreliable : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotIntegrable : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InvalidDensity : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class UnsupportedPair : public UsageError {
 public:
  using UsageError::UsageError;
};

class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace aek

#pragma once

#include <stdexcept>
#include <string>

namespace phinet {

// Root of every error thrown by the library. Subclasses group failures by the
// way a caller reacts to them: bad input (InvalidArgument, ParseError) versus
// numerical breakdown (the NumericalError family).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition or contract on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed network or noise file; also raised for unreadable paths.
class ParseError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// The coupled system has no stationary distribution.
class InstabilityError : public NumericalError {
 public:
  InstabilityError(const std::string& what, double spectral_radius, double coupling = -1.0)
      : NumericalError(what), spectral_radius_(spectral_radius), coupling_(coupling) {}

  double spectral_radius() const noexcept { return spectral_radius_; }
  // Coupling at which the failure happened, or -1 when not applicable.
  double coupling() const noexcept { return coupling_; }

 private:
  double spectral_radius_;
  double coupling_;
};

// A linear system that should be regular is singular: a product of two
// eigenvalues equals one, or the stationary covariance has lost rank.
class CriticalityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A matrix expected to be positive definite is not, beyond round-off.
class DegeneracyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A network with an all-zero spectrum has no critical coupling.
class NoCriticalityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A rational function was evaluated on one of its poles.
class PoleError : public NumericalError {
 public:
  PoleError(const std::string& what, double location)
      : NumericalError(what), location_(location) {}
  double location() const noexcept { return location_; }

 private:
  double location_;
};

// Exact interpolation did not converge under the degree cap.
class ReconstructionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace phinet

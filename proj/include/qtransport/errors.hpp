// errors.hpp — exception taxonomy; the CLI maps these onto exit codes
#pragma once

#include <stdexcept>
#include <string>

namespace qtransport {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Model validation failures. `kind` keeps the machine-readable class
// (DimensionOrder, BoundaryDim, EnergyOrder, BohrCollision, RateSign).
class ValidationError : public Error {
 public:
  ValidationError(std::string kind, const std::string& what)
      : Error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class SupportViolation : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

class ReconstructionFailure : public Error {
 public:
  using Error::Error;
};

class ProjectorFailure : public Error {
 public:
  using Error::Error;
};

class DHViolated : public Error {
 public:
  using Error::Error;
};

class NotInSubalgebra : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class NormViolation : public Error {
 public:
  using Error::Error;
};

class ClosedFormMismatch : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtransport

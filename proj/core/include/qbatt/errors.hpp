#pragma once

#include <stdexcept>
#include <string>

namespace qbatt {

// Root of the library's exception family.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad inputs or parameters: caught before any dynamics run.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Parameter outside its mathematical domain (negative time, |c1| > 1, ...).
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Dissipator matrix fails complete positivity.
class CPViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Requested integrator step exceeds the stability bound for the generator.
class StepTooLarge : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A numerical invariant broke while (or after) running dynamics.
class NumericsError : public Error {
 public:
  using Error::Error;
};

// An operator that must be Hermitian is not, beyond tolerance.
class NonHermitianInput : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

// A quantity that must be real carries a non-negligible imaginary part.
class ImaginaryResidue : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

// State-validity failure with the offending residual attached.
class InvariantViolation : public NumericsError {
 public:
  InvariantViolation(const std::string& what, double residual)
      : NumericsError(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class TraceViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class HermiticityViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class PositivityViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace qbatt

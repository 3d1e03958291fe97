#pragma once

#include <stdexcept>
#include <string>

namespace corrwork {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Global dimension d^n exceeds the configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Operand dimensions do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input violates a state/operator invariant (Hermiticity, trace, PSD, unitarity).
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain where the requested quantity is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The construction exists only for a restricted class of systems (e.g. qubits).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Iterative numerics did not converge.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, int iterations)
      : Error(what + " (after " + std::to_string(iterations) + " iterations)"),
        iterations_(iterations) {}
  int iterations() const noexcept { return iterations_; }

 private:
  int iterations_;
};

/// No parameter choice satisfies the requested constraints.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// The requested local bias lies outside what the protocol can reach.
class UnreachableBiasError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing an output file failed.
class FileError : public Error {
 public:
  using Error::Error;
};

}  // namespace corrwork

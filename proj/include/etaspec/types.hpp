#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace etaspec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Base of all domain errors; the CLI maps concrete types to exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NonSquareError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class NotPositiveError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefiniteError : public Error {
 public:
  NotPositiveDefiniteError(const std::string& msg, double offending)
      : Error(msg), offending_eigenvalue(offending) {}
  double offending_eigenvalue;
};

class ConvergenceFailureError : public Error {
 public:
  using Error::Error;
};

class DefectiveMatrixError : public Error {
 public:
  using Error::Error;
};

class ComplexSpectrumError : public Error {
 public:
  using Error::Error;
};

class NotAdmissibleError : public Error {
 public:
  using Error::Error;
};

class ConditionCapExceededError : public Error {
 public:
  using Error::Error;
};

class LinearlyDependentError : public Error {
 public:
  LinearlyDependentError(const std::string& msg, int index)
      : Error(msg), failing_index(index) {}
  int failing_index;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class NotInSpanError : public Error {
 public:
  NotInSpanError(const std::string& msg, double residual)
      : Error(msg), projection_residual(residual) {}
  double projection_residual;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace etaspec

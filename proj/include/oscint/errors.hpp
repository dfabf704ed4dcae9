#ifndef OSCINT_ERRORS_HPP
#define OSCINT_ERRORS_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscint {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidDegree : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// A pivot or diagonal entry fell below the singularity threshold.
class SingularMatrix : public Error {
public:
  SingularMatrix(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  /// Row (back-substitution) or column (factorization) that failed.
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

/// The Levin system degenerates at omega == 0; use an ordinary quadrature.
class ZeroFrequency : public Error {
public:
  using Error::Error;
};

class InvalidInterval : public Error {
public:
  using Error::Error;
};

/// The amplitude produced a non-finite value at a collocation node.
class SamplingError : public Error {
public:
  SamplingError(const std::string& what, double location)
      : Error(what), location_(location) {}
  double location() const noexcept { return location_; }

private:
  double location_;
};

class NonMonotonePhase : public Error {
public:
  using Error::Error;
};

class InversionError : public Error {
public:
  using Error::Error;
};

/// Adaptive quadrature ran out of panels before meeting its tolerance.
class AccuracyNotReached : public Error {
public:
  AccuracyNotReached(const std::string& what, std::complex<double> estimate,
                     double error_estimate)
      : Error(what), estimate_(estimate), error_estimate_(error_estimate) {}
  std::complex<double> estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

private:
  std::complex<double> estimate_;
  double error_estimate_;
};

class UnknownExample : public Error {
public:
  using Error::Error;
};

/// Syntax error in an amplitude expression.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset,
             std::vector<std::string> expected)
      : Error(what), offset_(offset), expected_(std::move(expected)) {}
  /// Byte offset into the source text.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public ParseError {
public:
  UnknownIdentifier(const std::string& what, std::size_t offset,
                    std::string name)
      : ParseError(what, offset, {}), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

}  // namespace oscint

#endif  // OSCINT_ERRORS_HPP

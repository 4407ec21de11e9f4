#pragma once

#include <stdexcept>
#include <string>

namespace genus1 {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation is not defined for the given input (wrong degree, zero
/// scaling factor, mismatched fields, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  MalformedJson,
  MalformedRational,
  MalformedPolynomial,
  UnknownDegree,
  WrongCoefficientCount,
  WrongMatrixShape,
  NonSymmetricMatrix,
  NonAlternatingMatrix,
  NonLinearEntry,
};

const char* to_string(ParseErrorKind kind);

/// Malformed textual input. `location()` names the offending element, e.g.
/// "coefficients.q1[0][2]", and is empty when no location applies.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& message, std::string location = {})
      : Error(location.empty() ? message : location + ": " + message),
        kind_(kind),
        location_(std::move(location)),
        detail_(message) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  const std::string& location() const noexcept { return location_; }
  const std::string& detail() const noexcept { return detail_; }

  ParseError at(const std::string& location) const {
    return ParseError(kind_, detail_, location_.empty() ? location : location + "." + location_);
  }

 private:
  ParseErrorKind kind_;
  std::string location_;
  std::string detail_;
};

/// A coefficient cannot be reduced modulo p because p divides its denominator.
class ReductionError : public DomainError {
 public:
  ReductionError(const std::string& coefficient, const std::string& value, unsigned long prime)
      : DomainError("coefficient " + coefficient + " = " + value + " is not a " +
                    std::to_string(prime) + "-adic unit denominator; cannot reduce mod " +
                    std::to_string(prime)),
        coefficient_(coefficient) {}

  const std::string& coefficient() const noexcept { return coefficient_; }

 private:
  std::string coefficient_;
};

}  // namespace genus1

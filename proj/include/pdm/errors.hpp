#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model or input parameter violates a stated constraint.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Requested level n does not satisfy n < A.
class NoBoundState : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

/// Level exists in the closed-form expression but is not a bound state.
class LevelInvalid : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class NonNormalizable : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

/// l(l+1) = -eps - 1/4 has no real root.
class ComplexAngularMomentum : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

/// Evaluation outside the representable or admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A mass or potential term is not finite at `x`.
class DomainOverflow : public DomainError {
 public:
  DomainOverflow(const std::string& what, double x) : DomainError(what), x_(x) {}
  double where() const noexcept { return x_; }

 private:
  double x_;
};

/// A verification was asked to judge a function that vanishes at every sample.
class DegenerateTest : public Error {
 public:
  using Error::Error;
};

}  // namespace pdm

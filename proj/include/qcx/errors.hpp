#pragma once

#include <stdexcept>
#include <string>

namespace qcx {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A point lies outside the region where the requested rule applies.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Evaluation requested within the exclusion radius of the pole.
class SingularityError : public Error {
public:
  using Error::Error;
};

class InvalidParameter : public Error {
public:
  using Error::Error;
};

/// Two functions that must share a pole do not.
class PoleMismatch : public Error {
public:
  using Error::Error;
};

/// Closed-form Wirtinger derivatives of an outer rule requested at |z| <= 1.
class RuleMismatch : public Error {
public:
  using Error::Error;
};

/// dz F vanished (numerically) where a dilatation quotient was requested.
class DegenerateError : public Error {
public:
  using Error::Error;
};

class NonFiniteError : public Error {
public:
  using Error::Error;
};

/// A certified function violated its own lower Lipschitz bound. This can
/// only happen through a bug, so it is not a user-facing failure mode.
class BoundViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace qcx

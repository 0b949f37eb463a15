#pragma once

#include <stdexcept>
#include <string>

namespace weylfaces {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A generalized Cartan matrix axiom failed at entry (i, j).
class GcmViolation : public Error {
public:
  GcmViolation(int i, int j, const std::string& reason)
      : Error("GCM violation at (" + std::to_string(i) + "," + std::to_string(j) + "): " + reason),
        row(i), col(j), reason(reason) {}
  int row;
  int col;
  std::string reason;
};

/// No positive symmetrizer exists for the requested principal submatrix.
class NotSymmetrizable : public Error {
public:
  using Error::Error;
};

/// A weight that was required to be dominant is not.
class NotDominant : public Error {
public:
  using Error::Error;
};

/// A computation that is provably finite overflowed its explicit budget.
/// Ops whose result is semi-decidable return a cap-exceeded *value* instead.
class CapExceededError : public Error {
public:
  using Error::Error;
};

/// 2^|I| enumeration was requested beyond the configured rank guard.
class RankTooLarge : public Error {
public:
  using Error::Error;
};

/// The highest weight must be regular on the integrability for this op.
class RegularityRequired : public Error {
public:
  using Error::Error;
};

/// The hull of the module is not closed, so the requested description
/// does not exist.
class UnclosedError : public Error {
public:
  using Error::Error;
};

/// Oracle input exceeds the exact-enumeration budget.
class TooLarge : public Error {
public:
  using Error::Error;
};

/// A descriptor invariant or operation precondition was violated.
class DescriptorError : public Error {
public:
  using Error::Error;
};

/// Malformed model file or rational literal.
class ModelError : public Error {
public:
  using Error::Error;
};

}  // namespace weylfaces

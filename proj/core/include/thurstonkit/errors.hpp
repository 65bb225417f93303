#pragma once

#include <stdexcept>
#include <string>

namespace thurstonkit {

// Root of every error thrown by the library. The CLI maps all of these to
// exit code 2 except VerificationFailure, which maps to 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was not met (dimension or tag mismatch, invalid
// parameters, asymmetric input to a symmetric-only operation, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Polytope routines are exhaustive and only accept dimension <= 6.
class ScaleError : public Error {
 public:
  using Error::Error;
};

class OutsidePolytopeError : public Error {
 public:
  using Error::Error;
};

class ZeroNormError : public Error {
 public:
  using Error::Error;
};

// Malformed sector records, JSON documents or CLI values. The message names
// the offending field.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

// A maw dual graph total that is not an integral homology class.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

class CaseUnsupported : public Error {
 public:
  using Error::Error;
};

class WitnessUnavailable : public Error {
 public:
  using Error::Error;
};

// The norm-difference wrapping formula was requested for a class with no
// certified surface witness; without one the formula is only a lower bound.
class HypothesisNotCertified : public Error {
 public:
  using Error::Error;
};

// Two independent derivations of the same quantity disagreed.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace thurstonkit

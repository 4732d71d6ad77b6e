#pragma once

#include <stdexcept>
#include <string>

namespace sprsynth {

/// Malformed or out-of-domain arguments (zero polynomial, degree mismatch, bad text).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition failed, e.g. the family is not robustly stable.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction that is guaranteed to succeed did not. Never expected in
/// practice.
class InternalContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sprsynth

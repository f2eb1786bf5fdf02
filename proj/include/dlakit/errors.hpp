#pragma once

#include <stdexcept>
#include <string>

namespace dlakit {

// Malformed input: length mismatch, bad literal, n out of range, the all-I string.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An element expected to be C_n-invariant is not.
class InvarianceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed-form identity failed to hold where it must (e.g. a commutator-table row
// outside the named span).
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Floating-point checks that detected a breakdown: rank ambiguity, root
// invariants violated, leakage out of an invariant subspace.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds a hard size cap (dense oracle).
class CapacityError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace dlakit

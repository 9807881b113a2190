#pragma once

#include <stdexcept>

namespace macc {

// Parameter ranges outside the model (N, K, k, z bounds, bad sweep ranges).
struct InvalidParamsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Instances the delivery construction cannot serve: gcd(k, K) != 1 while
// some sub-files stay out of reach.
struct UnsupportedParametersError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Demand vector of wrong length or with file indices outside the library.
struct InvalidDemandsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// File sizes incompatible with the split granularity a schedule needs.
struct SizeMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A missing part was never isolated while peeling, or two recoveries of the
// same part disagreed. Signals a scheme or implementation bug.
struct DecodeIncompleteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quantity evaluated outside its derivation domain (lower bound needs z >= K/2).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace macc

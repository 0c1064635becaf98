#pragma once

#include <stdexcept>
#include <string>

namespace shufcompat {

/// Raised when an input word is not a valid permutation (duplicates,
/// non-positive entries) or two words that must be disjoint overlap.
class InvalidPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's precondition does not hold for otherwise
/// well-formed inputs (empty permutation, birun index out of range, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace shufcompat

#pragma once

#include <stdexcept>
#include <string>

namespace majorana {

/// Violated precondition on caller-supplied data (bad grid, unknown tag,
/// unnormalized state, coefficient constraint, ...).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A root bracket without a sign change.
class bracket_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite intermediate values or a solver that failed to converge.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace majorana

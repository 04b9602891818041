#pragma once

#include <stdexcept>
#include <string>

namespace fourierlab {

/// A precondition on an argument was violated (bad order, radius, grid size...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation produced a result that fails its own consistency check,
/// e.g. a nonzero imaginary residue on a sum that must be real.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace fourierlab

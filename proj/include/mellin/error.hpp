#pragma once

#include <stdexcept>
#include <string>

namespace mellin {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: out-of-domain parameters, malformed files, mismatched grids.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical contract could not be met (zero norm, non-convergence,
/// missing derivatives, overflow).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mellin

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracvar {

/// Root of every exception thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad sizes, ranges, indices).
struct InvalidArgument : Error {
  using Error::Error;
};

/// The gamma function was evaluated at zero or a negative integer.
struct GammaPoleError : Error {
  using Error::Error;
};

/// A value was requested at a point where the operator is singular.
struct SingularityError : Error {
  using Error::Error;
};

/// LU factorization met a pivot below the breakdown threshold.
struct SingularMatrixError : Error {
  using Error::Error;
};

/// Expression source text is malformed; `offset` is the byte position.
struct ParseError : Error {
  ParseError(const std::string& message, std::size_t offset_)
      : Error(message), offset(offset_) {}
  std::size_t offset;
};

/// Expression evaluation left the domain of one of its operations.
struct EvaluationError : Error {
  using Error::Error;
};

}  // namespace fracvar

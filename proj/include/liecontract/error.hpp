#pragma once

#include <stdexcept>
#include <string>

namespace liecontract {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand sizes do not match the owning algebra.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Input violates a documented precondition or invariant.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Reading or writing a file failed, or its contents are malformed.
class IoError : public Error {
public:
  using Error::Error;
};

namespace detail {

inline void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(want) +
                         ", got " + std::to_string(got));
  }
}

}  // namespace detail
}  // namespace liecontract

#pragma once

#include <stdexcept>
#include <string>

namespace gop {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (zero divisor,
// singular gauge matrix, disallowed shift parameter, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap was hit (factorization effort).
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace gop

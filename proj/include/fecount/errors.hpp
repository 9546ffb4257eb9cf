#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fecount {

/// Base class for every failure caused by a well-formed but unsupported
/// request (as opposed to a malformed one). The CLI maps these to exit 3.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public DomainError {
 public:
  explicit NotPrime(std::uint64_t p)
      : DomainError(std::to_string(p) + " is not prime"), value_(p) {}
  std::uint64_t value() const noexcept { return value_; }

 private:
  std::uint64_t value_;
};

class GroupMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class IncompatibleSpec : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised instead of allocating tables or walking search spaces that exceed
/// the configured ceiling.
class ResourceError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace fecount

#pragma once

#include <stdexcept>
#include <string>

namespace debruijn {

// Raised when an instance is too large for the configured resource limits.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal contract is violated (degree balance, step caps).
// Seeing one of these means a bug, not bad input.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace debruijn

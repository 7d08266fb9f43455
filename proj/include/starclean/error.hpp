#pragma once

#include <stdexcept>
#include <string>

namespace starclean {

/// Bad user input: malformed specs, violated preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size or enumeration bound would be exceeded.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cross-check inside the library failed. Always a bug, never user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace starclean

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankbrittle {

/// Invalid arguments: bad vertex indices, malformed structures, violated preconditions.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input. `offset` is the byte position of the first bad byte.
class FormatError : public InputError {
public:
  FormatError(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// A solver or search hit a configured limit. The answer is unknown, never approximated.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A vertex-minor witness could not be replayed on the given graph.
class WitnessError : public InputError {
public:
  using InputError::InputError;
};

}  // namespace rankbrittle

#pragma once

#include <stdexcept>
#include <string>

namespace kdecomp {

// 64-bit arithmetic left the representable range.  Results are discarded,
// never wrapped.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Matrix or group dimensions do not line up.
struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Input violates a documented precondition (zero vector, non-primitive
// coordinates, composite not zero, group not halvable, ...).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace kdecomp

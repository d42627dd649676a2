#pragma once

#include <stdexcept>
#include <string>

namespace basicforms {

/// Operands live in incompatible spaces (variable counts, ambient dimensions, grid shapes).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numeric evaluation met the formal parameter `a` without a binding.
class UnboundParameter : public std::invalid_argument {
 public:
  UnboundParameter()
      : std::invalid_argument("formal parameter 'a' must be bound to a number before numeric evaluation") {}
};

class GroupNotFinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroupNotClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInvertible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IntertwiningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GridTooCoarse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OffLevelSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace basicforms

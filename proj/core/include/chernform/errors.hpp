#pragma once

#include <stdexcept>
#include <string>

namespace chernform {

/// Input violates a documented precondition (bad shape, wrong degree,
/// mixed scalar modes, singular frame change, unmet theorem hypothesis).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Two computations that must agree did not; indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace chernform

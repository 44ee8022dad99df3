#pragma once

#include <stdexcept>
#include <string>

namespace quiverkit {

// Domain error: a precondition on the input was violated. The CLI maps this
// to exit status 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computations that must agree did not. Always a defect.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace quiverkit

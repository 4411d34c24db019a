#pragma once

#include <stdexcept>
#include <string>

namespace rcf {

// Precondition violated by the caller.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Inputs were individually valid but mutually inconsistent.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Something that should not happen given correct code (precision bugs, failed convergence).
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rcf

#pragma once

#include <stdexcept>
#include <string>

namespace akm {

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised when a construction that should succeed does not (e.g. a dependent
// state basis or an inconsistent linear system).
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace akm

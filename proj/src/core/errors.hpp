#pragma once

#include <stdexcept>

namespace korient {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance exceeds an enumeration or materialization guard.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace korient

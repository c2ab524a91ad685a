#pragma once

#include <stdexcept>

namespace ramlab {

/// A configured enumeration or search budget was exhausted. The CLI maps this to exit code 3.
struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ramlab

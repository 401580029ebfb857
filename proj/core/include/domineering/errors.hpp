#pragma once

#include <stdexcept>

namespace domineering {

// A computation was refused or abandoned because it would exceed a configured
// resource limit (board width, oracle cell count, ...).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed external input: polynomial files, ASCII boards, b-files, JSON.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace domineering

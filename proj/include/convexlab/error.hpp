#pragma once

#include <stdexcept>
#include <string>

namespace convexlab {

// Malformed input: bad file syntax, out-of-range indices, invalid options.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a hard size guard (e.g. exhaustive search too large).
struct size_error : std::runtime_error {
  explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace convexlab

#pragma once

#include <stdexcept>
#include <string>

namespace slicefuse {

// Bad on-disk data, malformed dataset layouts, label values out of range.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid command-line usage beyond what the parser catches.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite training loss.
struct DivergenceError : std::runtime_error {
  explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace slicefuse

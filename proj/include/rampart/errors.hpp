#ifndef RAMPART_ERRORS_HPP
#define RAMPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rampart {

// Bad input: overlapping blocks, ground mismatch, malformed text, ...
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured feasibility cap was exceeded.
struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rampart

#endif

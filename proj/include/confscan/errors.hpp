#pragma once

#include <stdexcept>
#include <string>

namespace confscan {

// Caller handed us something outside an operation's domain of definition
// (bad parameter range, malformed injection, wrong label degree, ...).
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Data-dependent failure: the inputs parse but do not satisfy a
// configuration invariant (duplicate base points, overlapping segments,
// degenerate intervals).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Random generation could not satisfy the requested bounds.
class generation_error : public std::runtime_error {
 public:
  explicit generation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace confscan

#pragma once

#include <stdexcept>
#include <string>

namespace simion {

// Malformed user input: shape or path text, bad parts, illegal steps.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force operation was asked for more than it is allowed to enumerate.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace simion

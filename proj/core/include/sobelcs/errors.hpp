#pragma once

#include <stdexcept>
#include <string>

namespace sobelcs {

// Caller broke an operation's precondition (width mismatch, bad parameter).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Image too small or otherwise unusable for a 3x3 neighbourhood.
class ImageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Stream violates line framing (too many pixels per line, misplaced HBlank).
class FramingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Event arrived in a state that cannot accept it (pixel after end-of-frame).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sobelcs

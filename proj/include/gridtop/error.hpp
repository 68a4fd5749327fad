#pragma once

#include <stdexcept>
#include <string>

namespace gridtop {

/// Inputs outside an operation's mathematical domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inputs that exceed a representation or enumeration limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed text input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gridtop

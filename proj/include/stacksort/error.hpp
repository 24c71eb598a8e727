#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stacksort {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed values: duplicate entries, non-standard permutation where [n] is required.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Text that does not parse as a permutation or set partition.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " (at character " + std::to_string(position) + ")"),
        position_(position) {}

  // 1-based character offset into the offending text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A well-formed argument that violates an operation's precondition
// (e.g. a permutation containing 32-bar-4-1 handed to a preimage builder).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured size bound.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// No closed-form rule applies and brute force is over the bound.
class Undecidable : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

}  // namespace stacksort

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infgon {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A pair of integers that fails left <= right - 2.
struct InvalidArcError : Error {
  using Error::Error;
};

/// An operation was called outside its documented precondition.
struct PreconditionError : Error {
  using Error::Error;
};

struct NotMemberError : Error {
  using Error::Error;
};

/// The arc has no quadrangle to flip in (its outer apex is missing).
struct NotMutableError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message),
        line(line),
        message(message) {}

  std::size_t line;
  std::string message;
};

}  // namespace infgon

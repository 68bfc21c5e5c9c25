#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simproj {

// Base class for all input errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInputError : Error {
  using Error::Error;
};

struct NonFiniteError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct LengthMismatchError : Error {
  using Error::Error;
};

struct RaggedMatrixError : Error {
  RaggedMatrixError(const std::string& msg, std::size_t line_)
      : Error(msg), line(line_) {}

  std::size_t line;  // 1-based row whose length differs
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line_, std::size_t column_)
      : Error(msg), line(line_), column(column_) {}

  std::size_t line;    // 1-based
  std::size_t column;  // 1-based
};

}  // namespace simproj

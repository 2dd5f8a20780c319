#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hieroglyph {

enum class ErrorCode {
  OddLength,
  BadMultiplicity,
  BadToken,
  UnknownLetter,
  BoundExceeded,
  NotApplicable,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  // column is 1-based; 0 means the error has no meaningful column.
  Error(ErrorCode code, const std::string& what, std::size_t column = 0)
      : std::runtime_error(what), code_(code), column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  std::size_t column_;
};

}  // namespace hieroglyph

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flatsphere {

enum class ErrorCode {
  Syntax,
  DuplicateGluing,
  IndexOutOfRange,
  NonpositiveLength,
  InvalidSurface,
  DegenerateInput,
  Domain,
  BudgetExceeded,
  Mismatch,
  Inadmissible,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what, int line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  ErrorCode code() const { return code_; }
  // 1-based input line for parse errors, 0 otherwise.
  int line() const { return line_; }

private:
  ErrorCode code_;
  int line_;
};

}  // namespace flatsphere

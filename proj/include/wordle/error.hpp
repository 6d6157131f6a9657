#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wordle {

enum class ErrorCode {
  LengthMismatch,
  DuplicateWord,
  EmptyDictionary,
  InvalidSymbol,
  MarkingParseError,
  IncompatibleWords,
  EmptyFeasibleSet,
  BudgetExceeded,
  CapExceeded,
  NotFourRegular,
  InvalidInstance,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers what went
/// wrong without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wordle

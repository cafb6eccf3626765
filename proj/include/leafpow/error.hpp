#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leafpow {

enum class ErrorCode {
  kDuplicateLabel,
  kIndexOutOfRange,
  kSelfLoop,
  kNotATree,
  kNonPositiveLength,
  kDuplicateLeafLabel,
  kUnknownLabel,
  kSingleLeaf,
  kMalformedMatrix,
  kKTooSmall,
  kTooFewLeaves,
  kSlotMismatch,
  kInputIsLeafPower,
  kBudgetExceeded,
  kParse,
  kInvalidArgument,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace leafpow

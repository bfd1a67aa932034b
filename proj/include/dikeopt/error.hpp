#pragma once

#include <stdexcept>
#include <string>

namespace dikeopt {

enum class ErrorCode {
  InvalidInstance,
  NonMonotonePlan,
  IndexOutOfRange,
  DimensionMismatch,
  IoError,
  PointInfeasible,
  ExchangeIncreasedObjective,
  ReassignmentIncreasedObjective,
  ConditionsViolated,
  SearchSpaceTooLarge,
  NotAPath,
  CapacityOverflowsHeightSet,
  DimsTooLarge,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace dikeopt

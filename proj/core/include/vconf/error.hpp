#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vconf {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  SizeGuard,
  // partition-core
  NotAPartition,
  R1Violation,
  R2Violation,
  IndexOutOfShape,
  TotalMismatch,
  // enumeration
  ComponentMeaningless,
  // geometry
  VerticalityViolation,
  CollisionError,
  DimensionMismatch,
  ShapeMismatch,
  UnsupportedQ,
  // cluster partitions
  NotAnIrreduciblePartition,
  WrongParameterCount,
  DiscViolation,
  SupportMismatch,
};

std::string_view to_string(ErrorCode code);

// Every rejection raised by the library carries a machine-readable code next
// to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vconf

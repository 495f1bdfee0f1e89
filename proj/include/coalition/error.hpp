#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coalition {

enum class ErrorCode {
  IndexOutOfRange,
  LoopEdge,
  TooLarge,
  EmptyGraph,
  ParseError,
  OverlappingSets,
  NotAPartition,
  InvalidPartition,
  TooLargeForEnumeration,
  UnknownSpec,
  BadParameter,
  BadF1Params,
  OutOfRange,
  MalformedConstruction,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coalition

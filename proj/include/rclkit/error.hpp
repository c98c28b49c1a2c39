#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rclkit {

enum class ErrorKind {
  CycleDetected,
  NotALattice,
  NoBound,
  UnknownElement,
  PartialTable,
  MissingComplement,
  HostMismatch,
  GranuleOutOfUniverse,
  NonPartition,
  UnknownAttribute,
  EmptyCaseList,
  DegenerateDenominator,
  BoundExceeded,
  UnknownClaim,
  UnsupportedFormat,
  InvalidInput,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every module reports failures through this one exception type; the kind
/// is what the CLI prints and what tests match on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rclkit

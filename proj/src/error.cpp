#include "rclkit/error.hpp"

namespace rclkit {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBound: return "NoBound";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::PartialTable: return "PartialTable";
    case ErrorKind::MissingComplement: return "MissingComplement";
    case ErrorKind::HostMismatch: return "HostMismatch";
    case ErrorKind::GranuleOutOfUniverse: return "GranuleOutOfUniverse";
    case ErrorKind::NonPartition: return "NonPartition";
    case ErrorKind::UnknownAttribute: return "UnknownAttribute";
    case ErrorKind::EmptyCaseList: return "EmptyCaseList";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::UnknownClaim: return "UnknownClaim";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

}  // namespace rclkit

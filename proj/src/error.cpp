#include "slicepoly/error.hpp"

namespace slicepoly {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RealQuaternion: return "RealQuaternion";
    case ErrorCode::InvalidUnit: return "InvalidUnit";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::OutsideBall: return "OutsideBall";
    case ErrorCode::OutsideRadius: return "OutsideRadius";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::OffSlicePoint: return "OffSlicePoint";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

bool Error::is_domain_error() const noexcept {
  switch (code_) {
    case ErrorCode::OutsideDisk:
    case ErrorCode::OutsideBall:
    case ErrorCode::OutsideRadius:
    case ErrorCode::NoConvergence:
    case ErrorCode::OffSlicePoint:
      return true;
    default:
      return false;
  }
}

}  // namespace slicepoly

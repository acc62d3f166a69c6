#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slicepoly {

enum class ErrorCode {
  RealQuaternion,
  InvalidUnit,
  InvalidOrder,
  InvalidSize,
  OutsideDisk,
  OutsideBall,
  OutsideRadius,
  NotOrthogonal,
  OrderMismatch,
  NoConvergence,
  DomainMismatch,
  OffSlicePoint,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Thrown by every library operation that rejects its input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures caused by where a point lies (ball, disk, radius)
  /// or by a series that did not converge, as opposed to malformed input.
  bool is_domain_error() const noexcept;

 private:
  ErrorCode code_;
};

}  // namespace slicepoly

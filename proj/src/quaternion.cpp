#include "slicepoly/quaternion.hpp"

#include <cmath>
#include <ostream>

#include "slicepoly/error.hpp"

namespace slicepoly {

namespace {
constexpr double kUnitTol = 1e-12;
constexpr double kParallelLimit = 0.9;
}  // namespace

bool Quaternion::is_finite() const {
  return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3);
}

double modulus(const Quaternion& q) {
  return std::hypot(std::hypot(q.x0, q.x1), std::hypot(q.x2, q.x3));
}

Quaternion inverse(const Quaternion& q) { return conj(q) / q.norm_sq(); }

Quaternion power(const Quaternion& q, int n) {
  Quaternion out = basis::one;
  for (int m = 0; m < n; ++m) out = out * q;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.x0 << ", " << q.x1 << ", " << q.x2 << ", " << q.x3 << ')';
}

ImaginaryUnit::ImaginaryUnit(const Quaternion& u) : u_(u) {
  const Quaternion sq = u * u;
  if (!u.is_finite() || std::abs(u.x0) > kUnitTol || std::abs(modulus(u) - 1.0) > kUnitTol ||
      modulus(sq + basis::one) > kUnitTol) {
    throw Error(ErrorCode::InvalidUnit, "not a unit imaginary quaternion");
  }
}

ImaginaryUnit ImaginaryUnit::normalized(const Quaternion& v) {
  const Quaternion im = v.imag();
  const double len = modulus(im);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw Error(ErrorCode::InvalidUnit, "cannot normalize a zero imaginary part");
  }
  return ImaginaryUnit(im / len, Trusted{});
}

SliceCoords slice_coords(const Quaternion& q) {
  const double y = modulus(q.imag());
  if (y == 0.0) {
    throw Error(ErrorCode::RealQuaternion,
                "slice coordinates of a real quaternion need an explicit unit");
  }
  return {q.x0, y, ImaginaryUnit::normalized(q)};
}

ImaginaryUnit orthogonal_unit(const ImaginaryUnit& unit) {
  const Quaternion& u = unit.value();
  for (const Quaternion& e : {basis::i, basis::j, basis::k}) {
    const double d = dot3(e, u);
    if (std::abs(d) < kParallelLimit) return ImaginaryUnit::normalized(e - d * u);
  }
  // Unreachable for a unit vector: its three components cannot all be >= 0.9.
  throw Error(ErrorCode::InvalidUnit, "no basis unit is far enough from the input");
}

bool in_slice(const Quaternion& q, const ImaginaryUnit& unit, double tol) {
  const Quaternion im = q.imag();
  const Quaternion residual = im - dot3(im, unit.value()) * unit.value();
  return modulus(residual) <= tol * (1.0 + modulus(q));
}

}  // namespace slicepoly

#pragma once

/**
 * @file quaternion.hpp
 * @brief Real quaternions q = x0 + x1 i + x2 j + x3 k and the slice
 *        decomposition q = x + I y.
 *
 * Multiplication is non-commutative: i j = k, j i = -k.  Every non-real
 * quaternion lies in exactly one slice C_I = R + R I with I a unit
 * imaginary quaternion, I^2 = -1.
 */

#include <array>
#include <complex>
#include <iosfwd>

namespace slicepoly {

struct Quaternion {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re) : x0(re) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double a, double b, double c, double d)
      : x0(a), x1(b), x2(c), x3(d) {}

  constexpr double real() const { return x0; }
  constexpr Quaternion imag() const { return {0.0, x1, x2, x3}; }
  constexpr double norm_sq() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
  constexpr std::array<double, 4> components() const { return {x0, x1, x2, x3}; }
  bool is_finite() const;

  constexpr Quaternion& operator+=(const Quaternion& o) {
    x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    x0 *= s; x1 *= s; x2 *= s; x3 *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    x0 /= s; x1 /= s; x2 /= s; x3 /= s;
    return *this;
  }
  constexpr Quaternion& operator*=(const Quaternion& o);

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator-(const Quaternion& q) { return {-q.x0, -q.x1, -q.x2, -q.x3}; }
constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
          a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

constexpr Quaternion& Quaternion::operator*=(const Quaternion& o) {
  *this = *this * o;
  return *this;
}

constexpr Quaternion conj(const Quaternion& q) { return {q.x0, -q.x1, -q.x2, -q.x3}; }

double modulus(const Quaternion& q);

/// Multiplicative inverse; the caller guarantees q != 0.
Quaternion inverse(const Quaternion& q);

/// Euclidean dot product of the imaginary parts viewed as vectors of R^3.
constexpr double dot3(const Quaternion& p, const Quaternion& q) {
  return p.x1 * q.x1 + p.x2 * q.x2 + p.x3 * q.x3;
}

/// Euclidean dot product in R^4.
constexpr double dot4(const Quaternion& p, const Quaternion& q) {
  return p.x0 * q.x0 + dot3(p, q);
}

/// q^n by repeated multiplication, n >= 0.
Quaternion power(const Quaternion& q, int n);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

namespace basis {
inline constexpr Quaternion one{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion k{0.0, 0.0, 0.0, 1.0};
}  // namespace basis

/// A purely imaginary quaternion of unit modulus, i.e. an element of the
/// sphere S of square roots of -1.
class ImaginaryUnit {
 public:
  /// Validates u: Re(u) = 0, |u| = 1 and u^2 = -1, each within 1e-12.
  explicit ImaginaryUnit(const Quaternion& u);

  /// Normalizes the imaginary part of v; throws InvalidUnit if it vanishes.
  static ImaginaryUnit normalized(const Quaternion& v);

  static ImaginaryUnit i() { return ImaginaryUnit(basis::i, Trusted{}); }
  static ImaginaryUnit j() { return ImaginaryUnit(basis::j, Trusted{}); }
  static ImaginaryUnit k() { return ImaginaryUnit(basis::k, Trusted{}); }

  const Quaternion& value() const { return u_; }
  operator const Quaternion&() const { return u_; }  // NOLINT

  ImaginaryUnit operator-() const { return ImaginaryUnit(-u_, Trusted{}); }

 private:
  struct Trusted {};
  ImaginaryUnit(const Quaternion& u, Trusted) : u_(u) {}

  Quaternion u_;
};

struct SliceCoords {
  double x = 0.0;
  double y = 0.0;
  ImaginaryUnit unit = ImaginaryUnit::i();
};

/// x = Re(q), y = |Im(q)| > 0, unit = Im(q)/|Im(q)|.  Throws RealQuaternion
/// when Im(q) = 0, since no unit is singled out there.
SliceCoords slice_coords(const Quaternion& q);

constexpr Quaternion embed(const Quaternion& unit, double x, double y) {
  return {x, unit.x1 * y, unit.x2 * y, unit.x3 * y};
}
inline Quaternion embed(const SliceCoords& c) { return embed(c.unit.value(), c.x, c.y); }

/// Deterministic J with J orthogonal to I: Gram-Schmidt of the first of
/// (i, j, k) whose dot product with I has absolute value below 0.9.
ImaginaryUnit orthogonal_unit(const ImaginaryUnit& unit);

/// Identifies C_I with C through x + I y <-> x + i y.
inline Quaternion to_slice(std::complex<double> z, const ImaginaryUnit& unit) {
  return embed(unit.value(), z.real(), z.imag());
}

/// Projection of q onto span{1, I}, read as a complex number.
inline std::complex<double> from_slice(const Quaternion& q, const ImaginaryUnit& unit) {
  return {q.x0, dot3(q, unit.value())};
}

/// True when the imaginary part of q is parallel to I (q lies in C_I).
bool in_slice(const Quaternion& q, const ImaginaryUnit& unit, double tol = 1e-12);

}  // namespace slicepoly

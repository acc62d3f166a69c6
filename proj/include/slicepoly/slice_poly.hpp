#pragma once

/**
 * @file slice_poly.hpp
 * @brief Slice regular and slice polyanalytic functions in truncated series
 *        form, with their structural operations.
 *
 * A slice regular function is stored as sum_n q^n a_n with quaternion
 * coefficients on the right.  A slice polyanalytic function of order N is
 * f(q) = sum_{k<N} conj(q)^k f_k(q) with slice regular f_k.  All series are
 * centered at the origin.
 */

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "slicepoly/complex_poly.hpp"
#include "slicepoly/quaternion.hpp"

namespace slicepoly {

using QuaternionFunction = std::function<Quaternion(const Quaternion&)>;

inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

class RegularSeries {
 public:
  RegularSeries() = default;

  /// Coefficients beyond cap are dropped and truncated() reports it.
  explicit RegularSeries(std::vector<Quaternion> coeffs, double radius = kInfiniteRadius,
                         std::size_t cap = kDefaultCap);

  static RegularSeries constant(const Quaternion& a, double radius = kInfiniteRadius) {
    return RegularSeries({a}, radius);
  }

  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  double radius() const { return radius_; }
  std::size_t cap() const { return cap_; }
  bool truncated() const { return truncated_; }

  /// Index of the last coefficient, or -1 for the empty (zero) series.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of q^n; zero past the stored length.
  Quaternion coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quaternion{}; }

  void mark_truncated() { truncated_ = true; }

 private:
  std::vector<Quaternion> coeffs_;
  double radius_ = kInfiniteRadius;
  std::size_t cap_ = kDefaultCap;
  bool truncated_ = false;
};

class PolySliceFunction {
 public:
  /// Throws InvalidOrder for an empty component list.
  explicit PolySliceFunction(std::vector<RegularSeries> components);

  int order() const { return static_cast<int>(components_.size()); }
  const std::vector<RegularSeries>& components() const { return components_; }
  const RegularSeries& component(int k) const { return components_.at(k); }

  /// Smallest component radius.
  double radius() const;
  bool truncated() const;
  /// Largest component degree (-1 when every component is empty).
  int degree() const;

  Quaternion operator()(const Quaternion& q) const;

 private:
  std::vector<RegularSeries> components_;
};

// Arithmetic used to assemble test data and round trips.  Orders are padded
// with zero components; radii combine by minimum.
RegularSeries operator+(const RegularSeries& a, const RegularSeries& b);
PolySliceFunction operator+(const PolySliceFunction& f, const PolySliceFunction& g);
/// Coefficientwise right multiplication q^n a_n -> q^n (a_n c).
RegularSeries times_right(const RegularSeries& s, const Quaternion& c);
PolySliceFunction times_right(const PolySliceFunction& f, const Quaternion& c);

/// sum_n q^n a_n by Horner's rule.  Throws OutsideRadius unless |q| < radius.
Quaternion eval_regular(const RegularSeries& s, const Quaternion& q);

/// sum_k conj(q)^k f_k(q).  Throws OutsideRadius unless |q| < radius.
Quaternion eval_poly(const PolySliceFunction& f, const Quaternion& q);

/// b_n = (n + 1) a_{n+1}.
RegularSeries slice_derivative(const RegularSeries& s);

/// Finite-difference value of 2^{-order} (d/dx + I d/dy)^order f at x + I y,
/// f restricted to the slice C_I.  Mixed partials use tensor central
/// differences with step h, refined by `richardson_levels` rounds of
/// Richardson extrapolation in h^2.  The roundoff floor grows like
/// eps / h^order, so the defaults favour a moderate step with two levels.
/// Supports 1 <= order <= 4 (InvalidOrder otherwise); h must be positive.
Quaternion dbar_power_numeric(const QuaternionFunction& f, const ImaginaryUnit& unit, double x,
                              double y, int order, double h = 0.1, int richardson_levels = 2);

struct SplitPair {
  ComplexPolySeries F;
  ComplexPolySeries G;
};

/// f_I(z) = F(z) + G(z) J on C_I, where every coefficient
/// a = a0 + a1 I + a2 J + a3 IJ contributes a0 + a1 i to F and a2 + a3 i to G.
/// Throws NotOrthogonal unless I and J are orthogonal.
SplitPair split(const PolySliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J);

/// Four intrinsic components with f_I = psi0 + psi1 I + psi2 J + psi3 IJ.
std::array<ComplexPolySeries, 4> refined_split(const PolySliceFunction& f, const ImaginaryUnit& I,
                                               const ImaginaryUnit& J);

/// Value at x + I y from the values f(x + J y) and f(x - J y).
Quaternion representation_combine(const Quaternion& f_plus, const Quaternion& f_minus,
                                  const ImaginaryUnit& I, const ImaginaryUnit& J);

struct SliceComponents {
  Quaternion alpha;
  Quaternion beta;
};

/// alpha = (f(x+Ky) + f(x-Ky)) / 2, beta = K (f(x-Ky) - f(x+Ky)) / 2, so that
/// f(x + I y) = alpha + I beta for every unit I.
SliceComponents slice_components(const PolySliceFunction& f, const ImaginaryUnit& K, double x,
                                 double y);

/// Unique slice polyanalytic extension of sum_k conj(z)^k h_k(z) given on C_I:
/// a complex coefficient a + b i becomes the quaternion a + b I.
PolySliceFunction extend(const ComplexPolySeries& h, const ImaginaryUnit& I,
                         double radius = kInfiniteRadius);

/// True when every coefficient of every component is real (within tol).
bool is_intrinsic(const PolySliceFunction& f, double tol = 1e-14);

/// Coefficient convolution c_n = sum_{p+q=n} a_p b_q, truncated to the
/// smaller cap.
RegularSeries star(const RegularSeries& a, const RegularSeries& b);

/// Componentwise star: (f *_N g)_k = f_k * g_k.  Throws OrderMismatch.
PolySliceFunction star_n(const PolySliceFunction& f, const PolySliceFunction& g);

struct SlicePoint {
  double x = 0.0;
  double y = 0.0;
};

/// Recovers the coefficients of an order-`order`, degree-`degree` function
/// from its values on the slice C_I by least squares.  Needs at least
/// (degree + 1) * order points; throws InvalidSize otherwise.
PolySliceFunction fit_on_slice(std::span<const SlicePoint> points,
                               std::span<const Quaternion> values, const ImaginaryUnit& I,
                               int order, int degree, double radius = kInfiniteRadius);

}  // namespace slicepoly

#pragma once

/**
 * @file complex_poly.hpp
 * @brief Polyanalytic functions of one complex variable and the classical
 *        polyanalytic Fock and Bergman kernels.
 *
 * A polyanalytic function of order n is f(z) = sum_{k<n} conj(z)^k a_k(z)
 * with a_k analytic.  These routines serve as the reference on a single
 * slice for the quaternionic kernels in kernels.hpp.
 */

#include <complex>
#include <cstddef>
#include <vector>

namespace slicepoly {

using Complex = std::complex<double>;

/// Default cap on the number of coefficients of one analytic component.
inline constexpr std::size_t kDefaultCap = 32;

class ComplexPolySeries {
 public:
  /// components[k][m] is the coefficient of conj(z)^k z^m.  Throws
  /// InvalidOrder for an empty list and InvalidSize when a component is
  /// longer than cap or holds a non-finite coefficient.
  explicit ComplexPolySeries(std::vector<std::vector<Complex>> components,
                             std::size_t cap = kDefaultCap);

  int order() const { return static_cast<int>(components_.size()); }
  std::size_t cap() const { return cap_; }
  const std::vector<std::vector<Complex>>& components() const { return components_; }
  const std::vector<Complex>& component(int k) const { return components_.at(k); }

  Complex operator()(Complex z) const;

 private:
  std::vector<std::vector<Complex>> components_;
  std::size_t cap_;
};

Complex eval_complex_poly(const ComplexPolySeries& p, Complex z);

/// Polyanalytic Fock kernel of order n for the measure e^{-|z|^2} dA / pi:
/// e^{conj(w) z} sum_{k<n} (-1)^k C(n, k+1) |z-w|^{2k} / k!.
Complex fock_kernel_c(int n, Complex z, Complex w);

/// Polyanalytic Bergman kernel of order n on the unit disk (Lebesgue measure).
/// Throws OutsideDisk unless |z|, |w| < 1.
Complex bergman_kernel_c(int n, Complex z, Complex w);

/// True when every coefficient has zero imaginary part (within tol).
bool is_intrinsic(const ComplexPolySeries& p, double tol = 1e-14);

}  // namespace slicepoly

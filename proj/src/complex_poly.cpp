#include "slicepoly/complex_poly.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "slicepoly/binomial.hpp"
#include "slicepoly/error.hpp"

namespace slicepoly {

namespace {

void require_order(int n, int max_order) {
  if (n < 1 || n > max_order) {
    throw Error(ErrorCode::InvalidOrder, "kernel order must lie in [1, " +
                                             std::to_string(max_order) +
                                             "], got " + std::to_string(n));
  }
}

// x^e with 0^0 = 1.
double int_pow(double x, int e) {
  double out = 1.0;
  for (int m = 0; m < e; ++m) out *= x;
  return out;
}

}  // namespace

ComplexPolySeries::ComplexPolySeries(std::vector<std::vector<Complex>> components,
                                     std::size_t cap)
    : components_(std::move(components)), cap_(cap) {
  if (components_.empty()) {
    throw Error(ErrorCode::InvalidOrder, "polyanalytic order must be >= 1");
  }
  for (const auto& comp : components_) {
    if (comp.size() > cap_) {
      throw Error(ErrorCode::InvalidSize, "component longer than the truncation cap");
    }
    for (const Complex& c : comp) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw Error(ErrorCode::InvalidSize, "non-finite coefficient");
      }
    }
  }
}

Complex ComplexPolySeries::operator()(Complex z) const {
  Complex total{};
  Complex zbar_k{1.0, 0.0};
  const Complex zbar = std::conj(z);
  for (const auto& comp : components_) {
    Complex analytic{};
    for (auto it = comp.rbegin(); it != comp.rend(); ++it) analytic = analytic * z + *it;
    total += zbar_k * analytic;
    zbar_k *= zbar;
  }
  return total;
}

Complex eval_complex_poly(const ComplexPolySeries& p, Complex z) { return p(z); }

Complex fock_kernel_c(int n, Complex z, Complex w) {
  require_order(n, kMaxBinomialN);
  const double dist_sq = std::norm(z - w);
  double sum = 0.0;
  double factorial = 1.0;
  for (int k = 0; k < n; ++k) {
    if (k > 0) factorial *= k;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * static_cast<double>(binomial(n, k + 1)) * int_pow(dist_sq, k) / factorial;
  }
  return std::exp(std::conj(w) * z) * sum;
}

Complex bergman_kernel_c(int n, Complex z, Complex w) {
  require_order(n, kMaxBinomialN / 2);
  if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0)) {
    throw Error(ErrorCode::OutsideDisk, "Bergman kernel needs |z|, |w| < 1");
  }
  const Complex base = 1.0 - std::conj(w) * z;
  const double base_sq = std::norm(base);
  const double dist_sq = std::norm(z - w);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * static_cast<double>(binomial(n, k + 1)) *
           static_cast<double>(binomial(n + k, n)) * int_pow(base_sq, n - 1 - k) *
           int_pow(dist_sq, k);
  }
  Complex denom{1.0, 0.0};
  for (int m = 0; m < 2 * n; ++m) denom *= base;
  return static_cast<double>(n) / (std::numbers::pi * denom) * sum;
}

bool is_intrinsic(const ComplexPolySeries& p, double tol) {
  for (const auto& comp : p.components()) {
    for (const Complex& c : comp) {
      if (std::abs(c.imag()) > tol) return false;
    }
  }
  return true;
}

}  // namespace slicepoly

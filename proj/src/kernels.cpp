#include "slicepoly/kernels.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "slicepoly/binomial.hpp"
#include "slicepoly/error.hpp"

namespace slicepoly {

namespace {

constexpr int kMaxExpTerms = 512;

void require_order(int N, int max_order) {
  if (N < 1 || N > max_order) {
    throw Error(ErrorCode::InvalidOrder, "kernel order must lie in [1, " +
                                             std::to_string(max_order) +
                                             "], got " + std::to_string(N));
  }
}

void require_ball(const Quaternion& q, const Quaternion& r) {
  if (!(modulus(q) < 1.0) || !(modulus(r) < 1.0)) {
    throw Error(ErrorCode::OutsideBall, "Bergman kernel needs |q|, |r| < 1");
  }
}

double int_pow(double x, int e) {
  double out = 1.0;
  for (int m = 0; m < e; ++m) out *= x;
  return out;
}

// (1 - 2 Re(a) s + |a|^2 s^2)^(-e) for s in the slice of `anchor`, with a
// given by its real part and |Im a|.  The base commutes with the anchor and
// factors as (1 - a s)(1 - conj(a) s), which avoids cancellation when it is
// small.
Quaternion slice_inverse_power(const Quaternion& a, const Quaternion& s, const Quaternion& anchor,
                               int e) {
  const ImaginaryUnit unit = modulus(anchor.imag()) > 0.0 ? ImaginaryUnit::normalized(anchor)
                                                          : ImaginaryUnit::i();
  const std::complex<double> z = from_slice(s, unit);
  const std::complex<double> ac(a.real(), modulus(a.imag()));
  const std::complex<double> base = (1.0 - ac * z) * (1.0 - std::conj(ac) * z);
  std::complex<double> p{1.0, 0.0};
  for (int m = 0; m < e; ++m) p *= base;
  return to_slice(1.0 / p, unit);
}

// (1 - x c)^{*e} at x, using (f * g)(x) = f(x) g(f(x)^-1 x f(x)) repeatedly,
// so no binomial cancellation occurs.
Quaternion star_power(const Quaternion& x, const Quaternion& c, int e) {
  Quaternion value = basis::one;
  Quaternion cur = x;
  for (int m = 0; m < e; ++m) {
    const Quaternion f = basis::one - cur * c;
    value = value * f;
    cur = inverse(f) * cur * f;
  }
  return value;
}

}  // namespace

KernelValue e_star(const Quaternion& p, const Quaternion& q, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidSize, "tolerance must be positive");
  const Quaternion qbar = conj(q);
  const double x = modulus(p) * modulus(q);

  Quaternion p_pow = basis::one;     // p^n
  Quaternion qbar_pow = basis::one;  // conj(q)^n / n!
  Quaternion sum{};
  double term_bound = 1.0;  // x^n / n!
  for (int n = 0; n < kMaxExpTerms; ++n) {
    if (n > 0) {
      p_pow = p_pow * p;
      qbar_pow = qbar_pow * qbar / static_cast<double>(n);
      term_bound *= x / n;
    }
    sum += p_pow * qbar_pow;
    if (!sum.is_finite()) break;

    const double next = term_bound * x / (n + 1);
    const double ratio = x / (n + 2);
    if (ratio < 1.0) {
      const double tail = next / (1.0 - ratio);
      const double scale = 1.0 + modulus(sum);
      if (tail <= tol * scale) return {sum, n + 1, tail / scale};
    }
  }
  throw Error(ErrorCode::NoConvergence,
              "e_* series did not converge within 512 terms (|p||q| too large)");
}

double laguerre(int alpha, int j, double x) {
  if (alpha < 0 || j < 0) throw Error(ErrorCode::InvalidOrder, "Laguerre indices must be >= 0");
  // (m + 1) L_{m+1} = (2m + 1 + alpha - x) L_m - (m + alpha) L_{m-1}
  double prev = 1.0;
  if (j == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int m = 1; m < j; ++m) {
    const double next = ((2.0 * m + 1.0 + alpha - x) * cur - (m + alpha) * prev) / (m + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

KernelValue fock_kernel(int N, const Quaternion& q, const Quaternion& r, double tol) {
  require_order(N, kMaxBinomialN);
  KernelValue kv = e_star(q, r, tol);
  kv.value *= laguerre(1, N - 1, (q - r).norm_sq());
  return kv;
}

double bergman_psi(int N, const Quaternion& q, const Quaternion& r) {
  require_order(N, kMaxBergmanOrder);
  const double a = (basis::one - conj(r) * q).norm_sq();
  const double b = (q - r).norm_sq();
  double sum = 0.0;
  for (int k = 0; k < N; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * static_cast<double>(binomial(N, k + 1)) *
           static_cast<double>(binomial(N + k, N)) * int_pow(a, N - 1 - k) * int_pow(b, k);
  }
  return sum;
}

Quaternion bergman_p(int N, const Quaternion& q, const Quaternion& r) {
  require_order(N, kMaxBergmanOrder);
  return star_power(conj(q), conj(r), 2 * N) * (N / std::numbers::pi);
}

Quaternion bergman_q(int N, const Quaternion& q, const Quaternion& r) {
  require_order(N, kMaxBergmanOrder);
  return slice_inverse_power(q, conj(r), r, 2 * N);
}

Quaternion bergman_r(int N, const Quaternion& q, const Quaternion& r) {
  require_order(N, kMaxBergmanOrder);
  return slice_inverse_power(r, q, q, 2 * N);
}

Quaternion bergman_l(int N, const Quaternion& q, const Quaternion& r) {
  require_order(N, kMaxBergmanOrder);
  return star_power(q, r, 2 * N) * (N / std::numbers::pi);
}

KernelValue bergman_kernel(int N, const Quaternion& q, const Quaternion& r) {
  require_order(N, kMaxBergmanOrder);
  require_ball(q, r);
  const Quaternion value = bergman_p(N, q, r) * bergman_q(N, q, r) * bergman_psi(N, q, r);
  return {value, 2 * N + 1, 0.0};
}

KernelValue bergman_kernel_alt(int N, const Quaternion& q, const Quaternion& r) {
  require_order(N, kMaxBergmanOrder);
  require_ball(q, r);
  const Quaternion value = bergman_r(N, q, r) * bergman_l(N, q, r) * bergman_psi(N, q, r);
  return {value, 2 * N + 1, 0.0};
}

}  // namespace slicepoly

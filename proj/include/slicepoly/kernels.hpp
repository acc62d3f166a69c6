#pragma once

/**
 * @file kernels.hpp
 * @brief Closed-form reproducing kernels of the slice polyanalytic Fock
 *        space on H and the slice polyanalytic Bergman space on the unit
 *        ball B.
 *
 *   e_*(p conj(q)) = sum_n p^n conj(q)^n / n!
 *   K_N(q, r)      = e_*(q conj(r)) L^1_{N-1}(|q - r|^2)
 *   B_N(q, r)      = P_N(q, r) Q_N(q, r) psi_N(q, r)
 *                  = R_N(q, r) L_N(q, r) psi_N(q, r)
 */

#include "slicepoly/quaternion.hpp"

namespace slicepoly {

/// Largest order accepted by the Bergman kernels (C(2N, k) must stay exact).
inline constexpr int kMaxBergmanOrder = 10;

struct KernelValue {
  Quaternion value;
  int terms_used = 0;
  /// Bound on the neglected series tail relative to 1 + |value|.
  double truncation_error_bound = 0.0;
};

/// Partial sums of sum_n p^n conj(q)^n / n! until the tail bound drops
/// below tol (1 + |sum|).  Throws NoConvergence after 512 terms.
KernelValue e_star(const Quaternion& p, const Quaternion& q, double tol = 1e-14);

/// Generalized Laguerre polynomial L^alpha_j(x).
double laguerre(int alpha, int j, double x);

/// Slice polyanalytic Fock kernel of order N; the Laguerre factor is real.
KernelValue fock_kernel(int N, const Quaternion& q, const Quaternion& r, double tol = 1e-14);

/// sum_{k<N} (-1)^k C(N, k+1) C(N+k, N) |1 - conj(r) q|^{2(N-1-k)} |q - r|^{2k}
/// with 0^0 = 1.
double bergman_psi(int N, const Quaternion& q, const Quaternion& r);

/// Slice regular factor (N/pi) sum_{k<=2N} (-1)^k C(2N, k) conj(q)^k conj(r)^k,
/// evaluated as the *-power (1 - conj(q) conj(r))^{*2N} to avoid cancellation.
Quaternion bergman_p(int N, const Quaternion& q, const Quaternion& r);

/// (1 - 2 Re(q) conj(r) + |q|^2 conj(r)^2)^{-2N}, computed inside the slice of r.
Quaternion bergman_q(int N, const Quaternion& q, const Quaternion& r);

/// (1 - 2 q Re(r) + q^2 |r|^2)^{-2N}, computed inside the slice of q.
Quaternion bergman_r(int N, const Quaternion& q, const Quaternion& r);

/// (N/pi) sum_{k<=2N} (-1)^k C(2N, k) q^k r^k, evaluated like bergman_p.
Quaternion bergman_l(int N, const Quaternion& q, const Quaternion& r);

/// P_N Q_N psi_N in that order.  Throws OutsideBall unless |q|, |r| < 1.
KernelValue bergman_kernel(int N, const Quaternion& q, const Quaternion& r);

/// R_N L_N psi_N in that order.
KernelValue bergman_kernel_alt(int N, const Quaternion& q, const Quaternion& r);

}  // namespace slicepoly

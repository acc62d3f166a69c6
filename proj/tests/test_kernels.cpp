#include <cmath>
#include <numbers>

#include "slicepoly/binomial.hpp"
#include "slicepoly/complex_poly.hpp"
#include "slicepoly/kernels.hpp"
#include "slicepoly/random.hpp"
#include "slicepoly/slice_poly.hpp"
#include "test_util.hpp"

namespace slicepoly {
namespace {

using basis::i;
using basis::j;
using basis::k;

constexpr double kPi = std::numbers::pi;

// Explicit sum: L^a_n(x) = sum_m (-1)^m C(n + a, n - m) x^m / m!
double laguerre_sum(int a, int n, double x) {
  double acc = 0.0, fact = 1.0;
  for (int m = 0; m <= n; ++m) {
    if (m > 0) fact *= m;
    acc += (m % 2 ? -1.0 : 1.0) * static_cast<double>(binomial(n + a, n - m)) * std::pow(x, m) / fact;
  }
  return acc;
}

// Order one: sum_n (n + 1) / pi q^n conj(r)^n.
Quaternion bergman_order1_series(const Quaternion& q, const Quaternion& r) {
  Quaternion acc{}, qn(1.0), rn(1.0);
  for (int n = 0; n < 400; ++n) {
    acc += (qn * rn) * ((n + 1.0) / kPi);
    qn = qn * q;
    rn = rn * conj(r);
  }
  return acc;
}

TEST(EStar, Examples) {
  EXPECT_QUAT_NEAR(e_star(0.0, Quaternion(1, 2, 3, 4)).value, Quaternion(1.0), 1e-15);
  EXPECT_NEAR(e_star(1.0, 1.0).value.x0, std::exp(1.0), 1e-14);
  const KernelValue v = e_star(i, j);
  EXPECT_QUAT_NEAR(v.value, Quaternion(std::cosh(1.0), 0, 0, -std::sinh(1.0)), 1e-13);
  EXPECT_GT(v.terms_used, 0);
  EXPECT_LE(v.truncation_error_bound, 1e-14);

  // Same slice: plain exponential of q conj(r).
  const Quaternion q(0.3, 0.7, 0, 0), r(-0.2, 0.5, 0, 0);
  const Complex z = std::exp(Complex(0.3, 0.7) * std::conj(Complex(-0.2, 0.5)));
  EXPECT_QUAT_NEAR(e_star(q, r).value, to_slice(z, ImaginaryUnit::i()), 1e-13);

  EXPECT_THROWS_CODE(NoConvergence, e_star(Quaternion(400.0), Quaternion(400.0)));
}

TEST(EStarProperty, Hermitian) {
  RandomData rnd(51);
  for (int t = 0; t < 200; ++t) {
    const Quaternion q = rnd.quaternion(1.5), r = rnd.quaternion(1.5);
    ASSERT_LE(modulus(e_star(q, r).value - conj(e_star(r, q).value)), 1e-12 * (1 + modulus(e_star(q, r).value)));
  }
}

TEST(Laguerre, Examples) {
  EXPECT_DOUBLE_EQ(laguerre(1, 0, 3.0), 1.0);
  EXPECT_DOUBLE_EQ(laguerre(1, 1, 0.25), 1.75);
  EXPECT_NEAR(laguerre(1, 2, 0.5), 1.625, 1e-15);
  EXPECT_THROWS_CODE(InvalidOrder, laguerre(-1, 2, 0.5));
  EXPECT_THROWS_CODE(InvalidOrder, laguerre(1, -1, 0.5));
}

TEST(LaguerreProperty, MatchesExplicitSum) {
  RandomData rnd(52);
  for (int t = 0; t < 500; ++t) {
    const int a = rnd.integer(0, 3), n = rnd.integer(0, 12);
    const double x = rnd.uniform(0.0, 6.0);
    const double ref = laguerre_sum(a, n, x);
    ASSERT_NEAR(laguerre(a, n, x), ref, 1e-10 * (1.0 + std::abs(ref)));
  }
}

TEST(FockKernel, Examples) {
  EXPECT_QUAT_NEAR(fock_kernel(2, i, j).value, Quaternion{}, 1e-13);
  EXPECT_QUAT_NEAR(fock_kernel(1, i, j).value, e_star(i, j).value, 1e-15);
  const Quaternion q(0.2, -0.4, 0.1, 0.9);
  EXPECT_NEAR(fock_kernel(3, q, q).value.x0, 3.0 * std::exp(q.norm_sq()), 1e-11);
  EXPECT_THROWS_CODE(InvalidOrder, fock_kernel(0, q, q));
}

TEST(FockKernelProperty, SliceOracle) {
  RandomData rnd(53);
  for (int t = 0; t < 200; ++t) {
    const int N = rnd.integer(1, 5);
    const ImaginaryUnit I = rnd.unit();
    const SlicePoint a = rnd.point_in_disk(2.0), b = rnd.point_in_disk(2.0);
    const Complex z(a.x, a.y), w(b.x, b.y);
    const Complex kc = fock_kernel_c(N, z, w);
    const double scale = std::max(std::abs(kc), std::abs(std::exp(std::conj(w) * z)));
    const Quaternion kq = fock_kernel(N, to_slice(z, I), to_slice(w, I)).value;
    ASSERT_LE(modulus(kq - to_slice(kc, I)), 1e-10 * scale);
  }
}

TEST(FockKernelProperty, DbarAnnihilates) {
  RandomData rnd(54);
  for (int t = 0; t < 20; ++t) {
    const int N = rnd.integer(1, 3);
    const Quaternion r = rnd.quaternion(0.8);
    const ImaginaryUnit I = rnd.unit();
    const auto K = [&](const Quaternion& q) { return fock_kernel(N, q, r).value; };
    ASSERT_LE(modulus(dbar_power_numeric(K, I, rnd.uniform(-1, 1), rnd.uniform(-1, 1), N)), 1e-4);
  }
}

TEST(BergmanKernel, Examples) {
  EXPECT_NEAR(bergman_kernel(1, 0.0, 0.0).value.x0, 1.0 / kPi, 1e-15);
  EXPECT_NEAR(bergman_kernel(2, 0.0, 0.0).value.x0, 4.0 / kPi, 1e-14);
  const Quaternion q(0, 0.3, 0, 0);
  EXPECT_NEAR(bergman_kernel(2, q, q).value.x0, 4.0 / (kPi * 0.91 * 0.91), 1e-12);
  const Complex kc = bergman_kernel_c(2, Complex(0, 0.3), Complex(0, 0.3));
  EXPECT_QUAT_NEAR(bergman_kernel(2, q, q).value, to_slice(kc, ImaginaryUnit::i()), 1e-12);
  EXPECT_EQ(bergman_kernel(3, q, q).terms_used, 7);

  EXPECT_NEAR(bergman_psi(2, 0.0, 0.0), 2.0, 1e-15);
  EXPECT_NEAR(bergman_psi(1, q, 0.5), 1.0, 1e-15);

  EXPECT_THROWS_CODE(OutsideBall, bergman_kernel(1, Quaternion(1.0), 0.0));
  EXPECT_THROWS_CODE(OutsideBall, bergman_kernel(1, 0.0, Quaternion(0, 0, 0.8, 0.7)));
  EXPECT_THROWS_CODE(InvalidOrder, bergman_kernel(kMaxBergmanOrder + 1, 0.0, 0.0));
}

// (N/pi) sum_k (-1)^k C(2N, k) a^k b^k
Quaternion binomial_factor(int N, const Quaternion& a, const Quaternion& b) {
  Quaternion acc{}, ak(1.0), bk(1.0);
  for (int m = 0; m <= 2 * N; ++m) {
    acc += (ak * bk) * ((m % 2 ? -1.0 : 1.0) * static_cast<double>(binomial(2 * N, m)));
    ak = ak * a;
    bk = bk * b;
  }
  return acc * (N / kPi);
}

TEST(BergmanKernelProperty, FactorsMatchExpansion) {
  RandomData rnd(58);
  for (int t = 0; t < 200; ++t) {
    const int N = rnd.integer(1, kMaxBergmanOrder);
    const Quaternion q = rnd.point_in_ball(0.5), r = rnd.point_in_ball(0.5);
    const Quaternion p = binomial_factor(N, conj(q), conj(r));
    const Quaternion l = binomial_factor(N, q, r);
    ASSERT_LE(modulus(bergman_p(N, q, r) - p), 1e-12 * (1.0 + modulus(p)));
    ASSERT_LE(modulus(bergman_l(N, q, r) - l), 1e-12 * (1.0 + modulus(l)));
  }
}

TEST(BergmanKernel, OrderOneMatchesSeries) {
  RandomData rnd(55);
  for (int t = 0; t < 50; ++t) {
    const Quaternion q = rnd.point_in_ball(0.8), r = rnd.point_in_ball(0.8);
    const Quaternion ref = bergman_order1_series(q, r);
    ASSERT_LE(modulus(bergman_kernel(1, q, r).value - ref), 1e-11 * (1.0 + modulus(ref)));
    ASSERT_LE(modulus(bergman_kernel_alt(1, q, r).value - ref), 1e-11 * (1.0 + modulus(ref)));
  }
}

TEST(BergmanKernelProperty, SliceOracleAndForms) {
  RandomData rnd(56);
  for (int t = 0; t < 300; ++t) {
    const int N = rnd.integer(1, 4);
    const ImaginaryUnit I = rnd.unit();
    const SlicePoint a = rnd.point_in_disk(0.95), b = rnd.point_in_disk(0.95);
    const Complex z(a.x, a.y), w(b.x, b.y);
    const Complex kc = bergman_kernel_c(N, z, w);
    const KernelValue kq = bergman_kernel(N, to_slice(z, I), to_slice(w, I));
    ASSERT_LE(modulus(kq.value - to_slice(kc, I)), 1e-10 * (1.0 + std::abs(kc)));

    const Quaternion q = rnd.point_in_ball(0.9), r = rnd.point_in_ball(0.9);
    const Quaternion k1 = bergman_kernel(N, q, r).value;
    const Quaternion k2 = bergman_kernel_alt(N, q, r).value;
    ASSERT_LE(modulus(k1 - k2), 1e-10 * (1.0 + modulus(k1)));
    ASSERT_LE(modulus(k1 - conj(bergman_kernel(N, r, q).value)), 1e-10 * (1.0 + modulus(k1)));
    ASSERT_GT(bergman_kernel(N, q, q).value.x0, 0.0);
    ASSERT_LE(modulus(bergman_kernel(N, q, q).value.imag()), 1e-10 * bergman_kernel(N, q, q).value.x0);
  }
}

TEST(BergmanKernelProperty, DbarAnnihilates) {
  RandomData rnd(57);
  for (int t = 0; t < 20; ++t) {
    const int N = rnd.integer(1, 3);
    const Quaternion r = rnd.point_in_ball(0.4);
    const ImaginaryUnit I = rnd.unit();
    const auto K = [&](const Quaternion& q) { return bergman_kernel(N, q, r).value; };
    // Step small enough that the stencil stays inside the ball.
    ASSERT_LE(modulus(dbar_power_numeric(K, I, rnd.uniform(-0.3, 0.3), rnd.uniform(-0.3, 0.3), N, 0.02)),
              1e-4);
  }
}

}  // namespace
}  // namespace slicepoly

#include <cmath>
#include <numbers>

#include "slicepoly/kernels.hpp"
#include "slicepoly/quadrature.hpp"
#include "slicepoly/random.hpp"
#include "test_util.hpp"

namespace slicepoly {
namespace {

using basis::i;
using basis::j;
using basis::one;

constexpr double kPi = std::numbers::pi;

const QuadratureRule& plane() {
  static const QuadratureRule rule = gauss_plane_rule(kDefaultPlaneNodes);
  return rule;
}

const QuadratureRule& disk() {
  static const QuadratureRule rule = disk_rule(kDefaultDiskRadial, kDefaultDiskAngular);
  return rule;
}

PolySliceFunction monomial(int conj_power, int power) {
  std::vector<RegularSeries> comps(conj_power + 1);
  std::vector<Quaternion> c(power + 1);
  c[power] = one;
  comps[conj_power] = RegularSeries(c);
  return PolySliceFunction(comps);
}

TEST(Rules, Moments) {
  std::vector<double> t, w;
  gauss_hermite(4, t, w);
  double m0 = 0.0, m6 = 0.0;
  for (int a = 0; a < 4; ++a) {
    m0 += w[a];
    m6 += w[a] * std::pow(t[a], 6);
  }
  EXPECT_NEAR(m0, std::sqrt(kPi), 1e-14);
  EXPECT_NEAR(m6, 15.0 / 8.0 * std::sqrt(kPi), 1e-13);

  gauss_legendre_unit(5, t, w);
  double l0 = 0.0, l9 = 0.0;
  for (int a = 0; a < 5; ++a) {
    l0 += w[a];
    l9 += w[a] * std::pow(t[a], 9);
  }
  EXPECT_NEAR(l0, 1.0, 1e-15);
  EXPECT_NEAR(l9, 0.1, 1e-15);

  EXPECT_NEAR(plane().integrate([](double, double) { return 1.0; }), 1.0, 1e-13);
  EXPECT_NEAR(plane().integrate([](double x, double y) { return x * x + y * y; }), 1.0, 1e-13);
  EXPECT_NEAR(disk().integrate([](double, double) { return 1.0; }), kPi, 1e-13);
  EXPECT_NEAR(disk().integrate([](double x, double) { return std::pow(x, 4); }), kPi / 8.0, 1e-13);
  EXPECT_EQ(plane().size(), 6400u);
  EXPECT_EQ(disk().size(), 128u * 256u);

  EXPECT_THROWS_CODE(InvalidSize, gauss_plane_rule(1));
  EXPECT_THROWS_CODE(InvalidSize, disk_rule(8, 3));
  EXPECT_THROWS_CODE(InvalidSize, QuadratureRule(RuleDomain::unit_disk, {{0, 0}}, {-1.0}));
  EXPECT_THROWS_CODE(InvalidSize, QuadratureRule(RuleDomain::unit_disk, {{0, 0}}, {}));
}

TEST(InnerProduct, Examples) {
  const ImaginaryUnit I = ImaginaryUnit::i();
  const auto f1 = [](const Quaternion&) { return Quaternion(1.0); };
  const auto fq = [](const Quaternion& q) { return q; };
  const auto fqq = [](const Quaternion& q) { return q * q; };
  EXPECT_QUAT_NEAR(fock_inner(f1, f1, I, plane()), Quaternion(1.0), 1e-13);
  EXPECT_QUAT_NEAR(fock_inner(fq, fq, I, plane()), Quaternion(1.0), 1e-13);
  EXPECT_QUAT_NEAR(fock_inner(fqq, fqq, I, plane()), Quaternion(2.0), 1e-12);
  EXPECT_QUAT_NEAR(fock_inner(fq, f1, I, plane()), Quaternion{}, 1e-13);
  EXPECT_QUAT_NEAR(bergman_inner(f1, f1, I, disk()), Quaternion(kPi), 1e-13);
  EXPECT_QUAT_NEAR(bergman_inner(fq, fq, I, disk()), Quaternion(kPi / 2.0), 1e-12);

  // Right-linear in f, conjugate-linear in g from the left.
  const Quaternion c(0.5, -1, 2, 0.3);
  const auto fc = [&](const Quaternion& q) { return q * c; };
  EXPECT_QUAT_NEAR(fock_inner(fc, fq, I, plane()), c, 1e-12);
  EXPECT_QUAT_NEAR(fock_inner(fq, fc, I, plane()), conj(c), 1e-12);

  EXPECT_THROWS_CODE(DomainMismatch, fock_inner(f1, f1, I, disk()));
  EXPECT_THROWS_CODE(DomainMismatch, bergman_inner(f1, f1, I, plane()));
}

TEST(Reproduce, Examples) {
  const ImaginaryUnit I = ImaginaryUnit::j();
  const PolySliceFunction c({RegularSeries::constant(Quaternion(1, 2, -1, 0.5))});
  EXPECT_LE(reproduce_residual(c, embed(I, 0.4, -0.7), Space::fock, 1, I, plane()), 1e-10);
  EXPECT_LE(reproduce_residual(monomial(1, 2), embed(I, 0.4, -0.7), Space::fock, 2, I, plane()), 1e-8);
  EXPECT_LE(reproduce_residual(monomial(1, 2), embed(I, 0.4, -0.7), Space::bergman, 2, I, disk()), 1e-8);
  // A regular function is reproduced by every higher order kernel too.
  EXPECT_LE(reproduce_residual(monomial(0, 3), embed(I, 0.2, 0.1), Space::bergman, 3, I, disk()), 1e-8);

  EXPECT_THROWS_CODE(OffSlicePoint,
                     reproduce_residual(c, Quaternion(0, 0.5, 0, 0), Space::fock, 1, I, plane()));
  EXPECT_THROWS_CODE(DomainMismatch, reproduce_residual(c, embed(I, 0.1, 0.1), Space::fock, 1, I, disk()));
  EXPECT_THROWS_CODE(OutsideBall, reproduce_residual(c, embed(I, 0.8, 0.8), Space::bergman, 1, I, disk()));
}

TEST(Reproduce, OffSliceValue) {
  RandomData rnd(61);
  const PolySliceFunction f = rnd.function_exact(2, 3);
  const ImaginaryUnit I = ImaginaryUnit::i();
  const Quaternion q(0.1, 0.0, 0.3, -0.4);
  EXPECT_QUAT_NEAR(reproduce_value(f, q, Space::fock, 2, I, plane()), f(q), 1e-8);
  EXPECT_QUAT_NEAR(reproduce_value(f, q, Space::bergman, 2, I, disk()), f(q), 1e-8);
}

TEST(ReproduceProperty, RandomFunctions) {
  RandomData rnd(62);
  for (int t = 0; t < 20; ++t) {
    const int N = rnd.integer(1, 3);
    const PolySliceFunction f = rnd.function_exact(N, rnd.integer(0, 4));
    const ImaginaryUnit I = rnd.unit();
    const SlicePoint z = rnd.point_in_disk(0.7);
    const Quaternion q = embed(I, z.x, z.y);
    ASSERT_LE(reproduce_residual(f, q, Space::fock, N, I, plane()), 1e-6);
    ASSERT_LE(reproduce_residual(f, q, Space::bergman, N, I, disk()), 1e-5);
  }
}

TEST(Norms, Examples) {
  const ImaginaryUnit I = ImaginaryUnit::i(), J = ImaginaryUnit::j();
  EXPECT_NEAR(slice_norm(monomial(0, 2), I, plane()), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(slice_norm(monomial(1, 0), I, disk()), std::sqrt(kPi / 2.0), 1e-12);

  const NormRatio intrinsic = norm_equivalence_check(monomial(1, 1), I, J, plane());
  EXPECT_NEAR(intrinsic.ratio, 1.0, 1e-12);
  EXPECT_TRUE(intrinsic.within_bounds);

  // q i: on C_i it is z i, on C_j it is a genuine quaternion.
  const PolySliceFunction qi({RegularSeries({0.0, i})});
  const NormRatio r = norm_equivalence_check(qi, I, J, plane());
  EXPECT_TRUE(r.within_bounds);
  EXPECT_NEAR(r.ratio, 1.0, 1e-12);

  const PolySliceFunction zero({RegularSeries()});
  EXPECT_EQ(norm_equivalence_check(zero, I, J, plane()).ratio, 1.0);
  EXPECT_THROWS_CODE(DomainMismatch, norm_equivalence_check(zero, I, J, disk()));
}

TEST(NormsProperty, EquivalenceBounds) {
  RandomData rnd(63);
  for (int t = 0; t < 30; ++t) {
    const PolySliceFunction f = rnd.function(3, 4);
    const NormRatio r = norm_equivalence_check(f, rnd.unit(), rnd.unit(), plane());
    ASSERT_TRUE(r.within_bounds) << r.ratio;
  }
}

TEST(Growth, Examples) {
  // f = 1 in the order-one Bergman space at |q| = 0.9: bound sqrt(pi)/(sqrt(pi) 0.19).
  const PolySliceFunction c({RegularSeries::constant(1.0)});
  const GrowthMargin g = growth_bound_check(c, Quaternion(0, 0, 0.9, 0), Space::bergman, disk());
  EXPECT_NEAR(g.bound, 1.0 / 0.19, 1e-10);
  EXPECT_NEAR(g.value, 1.0, 1e-15);
  EXPECT_GT(g.margin, 0.0);

  // conj(q) q at |q| = 1/sqrt(2) in the order-two Bergman space:
  // norm sqrt(pi/3), bound 2 sqrt(1/3) / 0.5.
  const GrowthMargin h = growth_bound_check(monomial(1, 1), Quaternion(0.5, 0.5, 0, 0), Space::bergman, disk());
  EXPECT_NEAR(h.bound, 4.0 / std::sqrt(3.0), 1e-10);
  EXPECT_NEAR(h.value, 0.5, 1e-15);

  const GrowthMargin fk = growth_bound_check(monomial(0, 1), Quaternion(1.0), Space::fock, plane());
  EXPECT_NEAR(fk.bound, std::exp(0.5), 1e-12);

  EXPECT_THROWS_CODE(OutsideBall, growth_bound_check(c, Quaternion(1.0), Space::bergman, disk()));
}

TEST(GrowthProperty, BoundHolds) {
  RandomData rnd(64);
  for (int t = 0; t < 30; ++t) {
    const PolySliceFunction f = rnd.function(3, 4);
    ASSERT_GE(growth_bound_check(f, rnd.point_in_ball(2.0), Space::fock, plane()).margin, 0.0);
    ASSERT_GE(growth_bound_check(f, rnd.point_in_ball(0.95), Space::bergman, disk()).margin, 0.0);
  }
}

}  // namespace
}  // namespace slicepoly

#include "slicepoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "slicepoly/complex_poly.hpp"
#include "slicepoly/kernels.hpp"
#include "slicepoly/quadrature.hpp"
#include "slicepoly/random.hpp"
#include "slicepoly/slice_poly.hpp"

namespace slicepoly {

namespace {

class Tally {
 public:
  void record(double residual, double tol) {
    ++run_;
    if (std::isfinite(residual) && residual <= tol) ++passed_;
    worst_ = std::isfinite(residual) ? std::max(worst_, residual) : residual;
  }
  // A check that raised an error counts as a failure.
  template <typename Fn>
  void check(double tol, Fn&& fn) {
    try {
      record(fn(), tol);
    } catch (const std::exception&) {
      record(std::numeric_limits<double>::infinity(), tol);
    }
  }
  void merge_into(VerifyReport& r) const {
    r.cases_run += run_;
    r.cases_passed += passed_;
    r.worst_residual = std::max(r.worst_residual, worst_);
  }

 private:
  int run_ = 0;
  int passed_ = 0;
  double worst_ = 0.0;
};

double max_coeff_diff(const PolySliceFunction& f, const PolySliceFunction& g) {
  double worst = 0.0;
  const int n = std::max(f.order(), g.order());
  for (int k = 0; k < n; ++k) {
    const RegularSeries empty;
    const RegularSeries& a = k < f.order() ? f.component(k) : empty;
    const RegularSeries& b = k < g.order() ? g.component(k) : empty;
    const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t m = 0; m < len; ++m) worst = std::max(worst, modulus(a.coeff(m) - b.coeff(m)));
  }
  return worst;
}

PolySliceFunction same_order_function(RandomData& rnd, int order, int max_degree) {
  std::vector<RegularSeries> comps;
  for (int k = 0; k < order; ++k) comps.push_back(rnd.series(rnd.integer(0, max_degree)));
  return PolySliceFunction(std::move(comps));
}

void structure_suite(const VerifyOptions& opt, Tally& t) {
  RandomData rnd(opt.seed ^ 0x5354525543ULL);
  for (int s = 0; s < opt.samples; ++s) {
    const Quaternion p = rnd.quaternion(2.0);
    const Quaternion q = rnd.quaternion(2.0);
    t.check(1e-13, [&] {
      return modulus(conj(p * q) - conj(q) * conj(p)) / (modulus(p) * modulus(q));
    });
    t.check(1e-13, [&] {
      return std::abs(modulus(p * q) - modulus(p) * modulus(q)) / (modulus(p) * modulus(q));
    });
    t.check(1e-14, [&] { return modulus(embed(slice_coords(q)) - q) / (1.0 + modulus(q)); });

    // dbar^N annihilation.
    t.check(1e-5, [&] {
      const PolySliceFunction f = rnd.function(4, 6);
      const ImaginaryUnit I = rnd.unit();
      const SlicePoint z = rnd.point_in_disk(1.0);
      const Quaternion d = dbar_power_numeric(f, I, z.x, z.y, f.order());
      return modulus(d) / (1.0 + modulus(f(embed(I, z.x, z.y))));
    });

    const PolySliceFunction f = rnd.function(3, 6);
    const ImaginaryUnit I = rnd.unit();
    const ImaginaryUnit Jr = rnd.unit();
    const SlicePoint z = rnd.point_in_disk(1.0);
    t.check(1e-12, [&] {
      const Quaternion direct = f(embed(I, z.x, z.y));
      const Quaternion combined =
          representation_combine(f(embed(Jr, z.x, z.y)), f(embed(Jr, z.x, -z.y)), I, Jr);
      return modulus(direct - combined);
    });
    t.check(1e-12, [&] {
      const SliceComponents a = slice_components(f, I, z.x, z.y);
      const SliceComponents b = slice_components(f, Jr, z.x, z.y);
      return std::max(modulus(a.alpha - b.alpha), modulus(a.beta - b.beta));
    });

    const ImaginaryUnit J = orthogonal_unit(I);
    t.check(1e-12, [&] {
      const SplitPair sp = split(f, I, J);
      const Complex w{z.x, z.y};
      return modulus(f(to_slice(w, I)) - (to_slice(sp.F(w), I) + to_slice(sp.G(w), I) * J.value()));
    });
    t.check(1e-12, [&] {
      const auto psi = refined_split(f, I, J);
      for (const auto& c : psi) {
        if (!is_intrinsic(c)) return std::numeric_limits<double>::infinity();
      }
      const Complex w{z.x, z.y};
      const Quaternion IJ = I.value() * J.value();
      const Quaternion rebuilt = to_slice(psi[0](w), I) + to_slice(psi[1](w), I) * I.value() +
                                 to_slice(psi[2](w), I) * J.value() + to_slice(psi[3](w), I) * IJ;
      return modulus(f(to_slice(w, I)) - rebuilt);
    });
    t.check(1e-13, [&] {
      const SplitPair sp = split(f, I, J);
      const PolySliceFunction back = extend(sp.F, I) + times_right(extend(sp.G, I), J.value());
      return max_coeff_diff(f, back);
    });

    // *_N ring axioms on equal-order data.
    const int order = rnd.integer(1, 3);
    const PolySliceFunction a = same_order_function(rnd, order, 4);
    const PolySliceFunction b = same_order_function(rnd, order, 4);
    const PolySliceFunction c = same_order_function(rnd, order, 4);
    t.check(1e-12, [&] { return max_coeff_diff(star_n(star_n(a, b), c), star_n(a, star_n(b, c))); });
    t.check(1e-12, [&] {
      return std::max(max_coeff_diff(star_n(a, b + c), star_n(a, b) + star_n(a, c)),
                      max_coeff_diff(star_n(a + b, c), star_n(a, c) + star_n(b, c)));
    });

    // Identity principle on one slice: samples determine the coefficients.
    t.check(1e-9, [&] {
      const int n = rnd.integer(1, 3);
      const int deg = rnd.integer(0, 6);
      const PolySliceFunction g = rnd.function_exact(n, deg);
      std::vector<SlicePoint> pts;
      std::vector<Quaternion> vals;
      for (int m = 0; m < 2 * n * (deg + 1); ++m) {
        const SlicePoint w = rnd.point_in_disk(1.0);
        pts.push_back(w);
        vals.push_back(g(embed(I, w.x, w.y)));
      }
      return max_coeff_diff(g, fit_on_slice(pts, vals, I, n, deg));
    });
  }
}

void fock_suite(const VerifyOptions& opt, Tally& t) {
  RandomData rnd(opt.seed ^ 0x464f434bULL);
  const QuadratureRule rule = gauss_plane_rule(opt.nodes > 0 ? opt.nodes : kDefaultPlaneNodes);
  for (int s = 0; s < opt.samples; ++s) {
    const Quaternion q = rnd.point_in_ball(2.0);
    const Quaternion r = rnd.point_in_ball(2.0);
    t.check(1e-10, [&] {
      const Quaternion k2 = fock_kernel(2, q, r).value;
      const Quaternion closed = e_star(q, r).value * (2.0 - (q - r).norm_sq());
      return modulus(k2 - closed) / (1.0 + modulus(k2));
    });

    const ImaginaryUnit I = rnd.unit();
    const int N = rnd.integer(1, 5);
    t.check(1e-10, [&] {
      const SlicePoint a = rnd.point_in_disk(2.0);
      const SlicePoint b = rnd.point_in_disk(2.0);
      const Complex z{a.x, a.y}, w{b.x, b.y};
      const Quaternion k = fock_kernel(N, embed(I, a.x, a.y), embed(I, b.x, b.y)).value;
      const Complex kc = fock_kernel_c(N, z, w);
      const double scale = std::max(std::abs(kc), std::abs(std::exp(std::conj(w) * z)));
      return modulus(k - to_slice(kc, I)) / scale;
    });
    t.check(1e-11, [&] {
      const Quaternion kd = fock_kernel(N, q, q).value;
      const double expected = N * std::exp(q.norm_sq());
      return modulus(kd - Quaternion(expected)) / expected;
    });
    t.check(1e-4, [&] {
      const int order = rnd.integer(1, 4);
      const Quaternion rr = rnd.point_in_ball(1.0);
      const SlicePoint z = rnd.point_in_disk(1.0);
      const QuaternionFunction kernel = [&](const Quaternion& p) {
        return fock_kernel(order, p, rr).value;
      };
      return modulus(dbar_power_numeric(kernel, I, z.x, z.y, order));
    });

    const PolySliceFunction f = rnd.function(3, 6);
    const SlicePoint z = rnd.point_in_disk(1.5);
    t.check(1e-6, [&] {
      return reproduce_residual(f, embed(I, z.x, z.y), Space::fock, f.order(), I, rule);
    });
    t.check(1e-6, [&] {
      const Quaternion off = embed(rnd.unit(), z.x, z.y);
      return modulus(f(off) - reproduce_value(f, off, Space::fock, f.order(), I, rule));
    });
    t.check(0.0, [&] {
      const NormRatio nr = norm_equivalence_check(f, I, rnd.unit(), rule);
      return nr.within_bounds ? 0.0 : std::max(0.5 - nr.ratio, nr.ratio - 2.0);
    });
    t.check(1e-10, [&] {
      const PolySliceFunction g = rnd.intrinsic_function(rnd.integer(1, 3), rnd.integer(0, 6));
      return std::abs(norm_equivalence_check(g, I, rnd.unit(), rule).ratio - 1.0);
    });
    t.check(1e-8, [&] {
      const GrowthMargin gm = growth_bound_check(f, rnd.point_in_ball(1.5), Space::fock, rule);
      return std::max(0.0, -gm.margin / gm.bound);
    });
  }
}

void bergman_suite(const VerifyOptions& opt, Tally& t) {
  RandomData rnd(opt.seed ^ 0x4245524dULL);
  const QuadratureRule rule = opt.nodes > 0 ? disk_rule(opt.nodes, 2 * opt.nodes)
                                            : disk_rule(kDefaultDiskRadial, kDefaultDiskAngular);
  for (int s = 0; s < opt.samples; ++s) {
    const ImaginaryUnit I = rnd.unit();
    const int N = rnd.integer(1, 5);
    t.check(1e-10, [&] {
      const SlicePoint a = rnd.point_in_disk(0.8);
      const SlicePoint b = rnd.point_in_disk(0.8);
      const Quaternion k = bergman_kernel(N, embed(I, a.x, a.y), embed(I, b.x, b.y)).value;
      const Complex kc = bergman_kernel_c(N, {a.x, a.y}, {b.x, b.y});
      return modulus(k - to_slice(kc, I)) / std::abs(kc);
    });
    const Quaternion q = rnd.point_in_ball(0.8);
    const Quaternion r = rnd.point_in_ball(0.8);
    t.check(1e-10, [&] {
      const Quaternion b1 = bergman_kernel(N, q, r).value;
      const Quaternion b2 = bergman_kernel_alt(N, q, r).value;
      return modulus(b1 - b2) / modulus(b1);
    });
    t.check(1e-10, [&] {
      const Quaternion d = rnd.point_in_ball(0.9);
      const Quaternion b = bergman_kernel(N, d, d).value;
      if (!(b.real() > 0.0)) return std::numeric_limits<double>::infinity();
      return modulus(b.imag()) / b.real();
    });
    t.check(1e-12, [&] {
      const double expected = N * N / std::numbers::pi;
      return std::abs(bergman_kernel(N, Quaternion{}, Quaternion{}).value.real() - expected) /
             expected;
    });

    const PolySliceFunction f = rnd.function(3, 6, 1.0);
    t.check(1e-5, [&] {
      const SlicePoint z = rnd.point_in_disk(0.7);
      return reproduce_residual(f, embed(I, z.x, z.y), Space::bergman, f.order(), I, rule);
    });
    t.check(1e-8, [&] {
      const GrowthMargin gm = growth_bound_check(f, rnd.point_in_ball(0.9), Space::bergman, rule);
      return std::max(0.0, -gm.margin / gm.bound);
    });
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "structure") return Suite::structure;
  if (name == "fock") return Suite::fock;
  if (name == "bergman") return Suite::bergman;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::structure: return "structure";
    case Suite::fock: return "fock";
    case Suite::bergman: return "bergman";
    case Suite::all: return "all";
  }
  return "unknown";
}

nlohmann::ordered_json VerifyReport::to_json() const {
  return {{"suite", suite},
          {"cases_run", cases_run},
          {"cases_passed", cases_passed},
          {"worst_residual", worst_residual},
          {"elapsed_ms", elapsed_ms}};
}

VerifyReport run_verify(Suite suite, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.suite = std::string(to_string(suite));
  Tally t;
  if (suite == Suite::structure || suite == Suite::all) structure_suite(options, t);
  if (suite == Suite::fock || suite == Suite::all) fock_suite(options, t);
  if (suite == Suite::bergman || suite == Suite::all) bergman_suite(options, t);
  t.merge_into(report);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace slicepoly

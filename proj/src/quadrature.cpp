#include "slicepoly/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "slicepoly/error.hpp"
#include "slicepoly/kernels.hpp"

namespace slicepoly {

namespace {

constexpr int kNewtonMaxIter = 100;
constexpr double kNewtonTol = 3e-15;
constexpr double kNormBoundSlack = 1e-8;

void require_domain(const QuadratureRule& rule, RuleDomain expected) {
  if (rule.domain() != expected) {
    throw Error(ErrorCode::DomainMismatch, "quadrature rule does not match the space");
  }
}

RuleDomain domain_of(Space space) {
  return space == Space::fock ? RuleDomain::gaussian_plane : RuleDomain::unit_disk;
}

Quaternion inner(const QuaternionFunction& f, const QuaternionFunction& g, const ImaginaryUnit& I,
                 const QuadratureRule& rule) {
  Quaternion acc{};
  const auto& nodes = rule.nodes();
  const auto& weights = rule.weights();
  for (std::size_t m = 0; m < nodes.size(); ++m) {
    const Quaternion p = embed(I, nodes[m].x, nodes[m].y);
    acc += (conj(g(p)) * f(p)) * weights[m];
  }
  return acc;
}

ImaginaryUnit unit_of(const Quaternion& q) {
  return modulus(q.imag()) > 0.0 ? ImaginaryUnit::normalized(q) : ImaginaryUnit::i();
}

// <f, K(., q)>_I for q already in C_I.
Quaternion reproduce_on_slice(const PolySliceFunction& f, const Quaternion& q, Space space, int N,
                              const ImaginaryUnit& I, const QuadratureRule& rule) {
  Quaternion acc{};
  const auto& nodes = rule.nodes();
  const auto& weights = rule.weights();
  for (std::size_t m = 0; m < nodes.size(); ++m) {
    const Quaternion p = embed(I, nodes[m].x, nodes[m].y);
    acc += (conj(space_kernel(space, N, p, q)) * eval_poly(f, p)) * weights[m];
  }
  return acc;
}

}  // namespace

QuadratureRule::QuadratureRule(RuleDomain domain, std::vector<SlicePoint> nodes,
                               std::vector<double> weights)
    : domain_(domain), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() != weights_.size()) {
    throw Error(ErrorCode::InvalidSize, "node and weight counts differ");
  }
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::InvalidSize, "quadrature weights must be positive and finite");
    }
  }
}

double QuadratureRule::integrate(const std::function<double(double, double)>& g) const {
  double acc = 0.0;
  for (std::size_t m = 0; m < nodes_.size(); ++m) acc += weights_[m] * g(nodes_[m].x, nodes_[m].y);
  return acc;
}

void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "Gauss-Hermite needs n >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const double pim4 = 1.0 / std::pow(std::numbers::pi, 0.25);
  double z = 0.0;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Asymptotic starting guesses for the largest roots, then extrapolation.
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(n, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * nodes[1];
    } else {
      z = 2.0 * z - nodes[i - 2];
    }
    double deriv = 0.0;
    for (int it = 0; it < kNewtonMaxIter; ++it) {
      // Orthonormal Hermite recurrence.
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      deriv = std::sqrt(2.0 * n) * p2;
      const double step = p1 / deriv;
      z -= step;
      if (std::abs(step) <= kNewtonTol * std::max(1.0, std::abs(z))) break;
    }
    nodes[i] = z;
    nodes[n - 1 - i] = -z;
    weights[i] = weights[n - 1 - i] = 2.0 / (deriv * deriv);
  }
}

void gauss_legendre_unit(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "Gauss-Legendre needs n >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  // P_n(t) and P_n'(t) by the three-term recurrence.
  const auto legendre = [n](double t, double& deriv) {
    double p1 = 1.0;
    double p2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j + 1.0) * t * p2 - j * p3) / (j + 1);
    }
    deriv = n * (t * p1 - p2) / (t * t - 1.0);
    return p1;
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double deriv = 1.0;
    for (int it = 0; it < kNewtonMaxIter; ++it) {
      const double step = legendre(t, deriv) / deriv;
      t -= step;
      if (std::abs(step) <= kNewtonTol) break;
    }
    legendre(t, deriv);
    const double w = 2.0 / ((1.0 - t * t) * deriv * deriv);
    // Map [-1, 1] -> [0, 1].
    nodes[i] = 0.5 * (1.0 - t);
    nodes[n - 1 - i] = 0.5 * (1.0 + t);
    weights[i] = weights[n - 1 - i] = 0.5 * w;
  }
}

QuadratureRule gauss_plane_rule(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidSize, "gauss_plane_rule needs n >= 2");
  std::vector<double> t, w;
  gauss_hermite(n, t, w);
  std::vector<SlicePoint> nodes;
  std::vector<double> weights;
  nodes.reserve(static_cast<std::size_t>(n) * n);
  weights.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      nodes.push_back({t[a], t[b]});
      weights.push_back(w[a] * w[b] / std::numbers::pi);
    }
  }
  return QuadratureRule(RuleDomain::gaussian_plane, std::move(nodes), std::move(weights));
}

QuadratureRule disk_rule(int nr, int nt) {
  if (nr < 2 || nt < 4) throw Error(ErrorCode::InvalidSize, "disk_rule needs nr >= 2, nt >= 4");
  std::vector<double> s, ws;
  gauss_legendre_unit(nr, s, ws);
  std::vector<SlicePoint> nodes;
  std::vector<double> weights;
  nodes.reserve(static_cast<std::size_t>(nr) * nt);
  weights.reserve(static_cast<std::size_t>(nr) * nt);
  const double dtheta = 2.0 * std::numbers::pi / nt;
  for (int a = 0; a < nr; ++a) {
    // r dr = ds / 2 with s = r^2.
    const double r = std::sqrt(s[a]);
    for (int b = 0; b < nt; ++b) {
      const double theta = b * dtheta;
      nodes.push_back({r * std::cos(theta), r * std::sin(theta)});
      weights.push_back(0.5 * ws[a] * dtheta);
    }
  }
  return QuadratureRule(RuleDomain::unit_disk, std::move(nodes), std::move(weights));
}

Quaternion fock_inner(const QuaternionFunction& f, const QuaternionFunction& g,
                      const ImaginaryUnit& I, const QuadratureRule& rule) {
  require_domain(rule, RuleDomain::gaussian_plane);
  return inner(f, g, I, rule);
}

Quaternion bergman_inner(const QuaternionFunction& f, const QuaternionFunction& g,
                         const ImaginaryUnit& I, const QuadratureRule& rule) {
  require_domain(rule, RuleDomain::unit_disk);
  return inner(f, g, I, rule);
}

Quaternion space_kernel(Space space, int N, const Quaternion& p, const Quaternion& q) {
  return space == Space::fock ? fock_kernel(N, p, q).value : bergman_kernel(N, p, q).value;
}

Quaternion reproduce_value(const PolySliceFunction& f, const Quaternion& q, Space space, int N,
                           const ImaginaryUnit& I, const QuadratureRule& rule) {
  require_domain(rule, domain_of(space));
  if (space == Space::bergman && !(modulus(q) < 1.0)) {
    throw Error(ErrorCode::OutsideBall, "Bergman reproduction needs |q| < 1");
  }
  if (in_slice(q, I)) return reproduce_on_slice(f, q, space, N, I, rule);
  const SliceCoords c = slice_coords(q);
  const Quaternion plus = reproduce_on_slice(f, embed(I, c.x, c.y), space, N, I, rule);
  const Quaternion minus = reproduce_on_slice(f, embed(I, c.x, -c.y), space, N, I, rule);
  return representation_combine(plus, minus, c.unit, I);
}

double reproduce_residual(const PolySliceFunction& f, const Quaternion& q, Space space, int N,
                          const ImaginaryUnit& I, const QuadratureRule& rule) {
  require_domain(rule, domain_of(space));
  if (!in_slice(q, I)) {
    throw Error(ErrorCode::OffSlicePoint, "reproduction point must lie in the integration slice");
  }
  return modulus(eval_poly(f, q) - reproduce_value(f, q, space, N, I, rule));
}

double slice_norm(const PolySliceFunction& f, const ImaginaryUnit& I, const QuadratureRule& rule) {
  const QuaternionFunction fn = [&f](const Quaternion& p) { return eval_poly(f, p); };
  return std::sqrt(std::max(0.0, inner(fn, fn, I, rule).real()));
}

NormRatio norm_equivalence_check(const PolySliceFunction& f, const ImaginaryUnit& I,
                                 const ImaginaryUnit& J, const QuadratureRule& rule) {
  require_domain(rule, RuleDomain::gaussian_plane);
  const double norm_i = slice_norm(f, I, rule);
  const double norm_j = slice_norm(f, J, rule);
  if (norm_i == 0.0 && norm_j == 0.0) return {1.0, true};
  const double ratio = norm_j / norm_i;
  return {ratio, ratio >= 0.5 - kNormBoundSlack && ratio <= 2.0 + kNormBoundSlack};
}

GrowthMargin growth_bound_check(const PolySliceFunction& f, const Quaternion& q, Space space,
                                const QuadratureRule& rule) {
  require_domain(rule, domain_of(space));
  const double r2 = q.norm_sq();
  if (space == Space::bergman && !(r2 < 1.0)) {
    throw Error(ErrorCode::OutsideBall, "Bergman growth bound needs |q| < 1");
  }
  const double norm = slice_norm(f, unit_of(q), rule);
  const double N = f.order();
  const double bound = space == Space::fock
                           ? std::sqrt(N) * std::exp(0.5 * r2) * norm
                           : N * norm / (std::sqrt(std::numbers::pi) * (1.0 - r2));
  const double value = modulus(eval_poly(f, q));
  return {bound - value, bound, value};
}

}  // namespace slicepoly

#pragma once

/**
 * @file quadrature.hpp
 * @brief Inner products on a single slice C_I and the checks built on them:
 *        reproducing-property residuals, independence of the norm from the
 *        slice, and pointwise growth bounds.
 *
 * Fock geometry: the whole plane with weight e^{-|z|^2} / pi, folded into the
 * rule weights (total mass 1).  Bergman geometry: the unit disk with plain
 * Lebesgue measure (total mass pi).
 */

#include <functional>
#include <vector>

#include "slicepoly/quaternion.hpp"
#include "slicepoly/slice_poly.hpp"

namespace slicepoly {

enum class RuleDomain { gaussian_plane, unit_disk };
enum class Space { fock, bergman };

class QuadratureRule {
 public:
  /// Throws InvalidSize on length mismatch or non-positive weights.
  QuadratureRule(RuleDomain domain, std::vector<SlicePoint> nodes, std::vector<double> weights);

  RuleDomain domain() const { return domain_; }
  const std::vector<SlicePoint>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }

  /// sum_i w_i g(x_i, y_i), accumulated in node order.
  double integrate(const std::function<double(double, double)>& g) const;

 private:
  RuleDomain domain_;
  std::vector<SlicePoint> nodes_;
  std::vector<double> weights_;
};

/// One-dimensional Gauss-Hermite rule for the weight e^{-t^2}; weights sum to sqrt(pi).
void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// One-dimensional Gauss-Legendre rule on [0, 1]; weights sum to 1.
void gauss_legendre_unit(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// n x n tensor Gauss-Hermite rule for e^{-x^2-y^2} / pi (row-major in x).
/// Throws InvalidSize for n < 2.
QuadratureRule gauss_plane_rule(int n);

/// Gauss-Legendre in s = r^2 (nr nodes) times the trapezoid rule in angle
/// (nt nodes) on the unit disk.  Throws InvalidSize for nr < 2 or nt < 4.
QuadratureRule disk_rule(int nr, int nt);

inline constexpr int kDefaultPlaneNodes = 80;
inline constexpr int kDefaultDiskRadial = 128;
inline constexpr int kDefaultDiskAngular = 256;

/// <f, g>_I = sum conj(g(x + I y)) f(x + I y) w over a gaussian_plane rule.
Quaternion fock_inner(const QuaternionFunction& f, const QuaternionFunction& g,
                      const ImaginaryUnit& I, const QuadratureRule& rule);

/// Same over a unit_disk rule.
Quaternion bergman_inner(const QuaternionFunction& f, const QuaternionFunction& g,
                         const ImaginaryUnit& I, const QuadratureRule& rule);

/// Kernel of the given space and order, K(p, q).
Quaternion space_kernel(Space space, int N, const Quaternion& p, const Quaternion& q);

/// <f, K(., q)>_I.  For q in C_I this is the reproduced value; for q off the
/// slice the two on-slice reproductions at x +- I y are recombined with the
/// representation formula.
Quaternion reproduce_value(const PolySliceFunction& f, const Quaternion& q, Space space, int N,
                           const ImaginaryUnit& I, const QuadratureRule& rule);

/// |f(q) - <f, K(., q)>_I|.  Throws OffSlicePoint unless q lies in C_I,
/// DomainMismatch when the rule does not match the space, OutsideBall for a
/// Bergman point outside the ball.
double reproduce_residual(const PolySliceFunction& f, const Quaternion& q, Space space, int N,
                          const ImaginaryUnit& I, const QuadratureRule& rule);

/// sqrt(<f, f>) on the slice C_I.
double slice_norm(const PolySliceFunction& f, const ImaginaryUnit& I, const QuadratureRule& rule);

struct NormRatio {
  double ratio = 1.0;
  bool within_bounds = true;
};

/// ratio = |f|_J / |f|_I in the Fock norm, expected to lie in [1/2, 2].
NormRatio norm_equivalence_check(const PolySliceFunction& f, const ImaginaryUnit& I,
                                 const ImaginaryUnit& J, const QuadratureRule& rule);

struct GrowthMargin {
  double margin = 0.0;
  double bound = 0.0;
  double value = 0.0;
};

/// margin = bound - |f(q)| with
///   Fock:    bound = sqrt(N) e^{|q|^2/2} |f|
///   Bergman: bound = N |f| / (sqrt(pi) (1 - |q|^2))
/// where N = f.order() and |f| is taken on the slice containing q.
GrowthMargin growth_bound_check(const PolySliceFunction& f, const Quaternion& q, Space space,
                                const QuadratureRule& rule);

}  // namespace slicepoly

#include "slicepoly/slice_poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "slicepoly/binomial.hpp"
#include "slicepoly/error.hpp"

namespace slicepoly {

namespace {

constexpr double kOrthogonalTol = 1e-12;
constexpr int kMaxDbarOrder = 4;

void require_orthogonal(const ImaginaryUnit& I, const ImaginaryUnit& J) {
  if (std::abs(dot3(I, J)) > kOrthogonalTol) {
    throw Error(ErrorCode::NotOrthogonal, "splitting needs orthogonal units");
  }
}

void require_inside(double radius, const Quaternion& q) {
  if (!(modulus(q) < radius)) {
    throw Error(ErrorCode::OutsideRadius, "evaluation point outside the series radius");
  }
}

// Coordinates of a in the orthonormal basis {1, I, J, IJ}.
std::array<double, 4> basis_coords(const Quaternion& a, const Quaternion& I, const Quaternion& J) {
  const Quaternion K = I * J;
  return {a.x0, dot3(a, I), dot3(a, J), dot3(a, K)};
}

Quaternion horner(const std::vector<Quaternion>& coeffs, const Quaternion& q) {
  Quaternion s{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = *it + q * s;
  return s;
}

// Central-difference stencil for the d-th derivative with unit step:
// D1 = {-1/2, 0, 1/2} for the odd part, D2 = {1, -2, 1} repeated.
std::map<int, double> stencil(int d) {
  std::map<int, double> out{{0, 1.0}};
  auto convolve = [&out](const std::map<int, double>& s) {
    std::map<int, double> next;
    for (const auto& [i, u] : out) {
      for (const auto& [j, v] : s) next[i + j] += u * v;
    }
    out = std::move(next);
  };
  if (d % 2 == 1) convolve({{-1, -0.5}, {1, 0.5}});
  for (int m = 0; m < d / 2; ++m) convolve({{-1, 1.0}, {0, -2.0}, {1, 1.0}});
  return out;
}

Quaternion dbar_power_raw(const QuaternionFunction& f, const Quaternion& I, double x, double y,
                          int order, double h) {
  Quaternion total{};
  Quaternion unit_power = basis::one;  // I^m
  for (int m = 0; m <= order; ++m) {
    const auto sx = stencil(order - m);
    const auto sy = stencil(m);
    Quaternion partial{};
    for (const auto& [a, u] : sx) {
      for (const auto& [b, v] : sy) partial += (u * v) * f(embed(I, x + a * h, y + b * h));
    }
    total += static_cast<double>(binomial(order, m)) * (unit_power * partial);
    unit_power = unit_power * I;
  }
  return total / (std::pow(h, order) * std::pow(2.0, order));
}

std::vector<RegularSeries> padded(const PolySliceFunction& f, int order) {
  std::vector<RegularSeries> out = f.components();
  const double r = f.radius();
  out.resize(order, RegularSeries({}, r));
  return out;
}

}  // namespace

RegularSeries::RegularSeries(std::vector<Quaternion> coeffs, double radius, std::size_t cap)
    : coeffs_(std::move(coeffs)), radius_(radius), cap_(cap) {
  if (!(radius_ > 0.0)) throw Error(ErrorCode::InvalidSize, "series radius must be positive");
  if (coeffs_.size() > cap_) {
    coeffs_.resize(cap_);
    truncated_ = true;
  }
  for (const Quaternion& c : coeffs_) {
    if (!c.is_finite()) throw Error(ErrorCode::InvalidSize, "non-finite series coefficient");
  }
}

PolySliceFunction::PolySliceFunction(std::vector<RegularSeries> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorCode::InvalidOrder, "order must be >= 1");
}

double PolySliceFunction::radius() const {
  double r = kInfiniteRadius;
  for (const auto& c : components_) r = std::min(r, c.radius());
  return r;
}

bool PolySliceFunction::truncated() const {
  return std::any_of(components_.begin(), components_.end(),
                     [](const RegularSeries& c) { return c.truncated(); });
}

int PolySliceFunction::degree() const {
  int d = -1;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

Quaternion PolySliceFunction::operator()(const Quaternion& q) const { return eval_poly(*this, q); }

RegularSeries operator+(const RegularSeries& a, const RegularSeries& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Quaternion> c(n);
  for (std::size_t m = 0; m < n; ++m) c[m] = a.coeff(m) + b.coeff(m);
  RegularSeries out(std::move(c), std::min(a.radius(), b.radius()), std::min(a.cap(), b.cap()));
  if (a.truncated() || b.truncated()) out.mark_truncated();
  return out;
}

PolySliceFunction operator+(const PolySliceFunction& f, const PolySliceFunction& g) {
  const int n = std::max(f.order(), g.order());
  auto fa = padded(f, n);
  auto ga = padded(g, n);
  std::vector<RegularSeries> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) out.push_back(fa[k] + ga[k]);
  return PolySliceFunction(std::move(out));
}

RegularSeries times_right(const RegularSeries& s, const Quaternion& c) {
  std::vector<Quaternion> coeffs = s.coeffs();
  for (Quaternion& a : coeffs) a = a * c;
  RegularSeries out(std::move(coeffs), s.radius(), s.cap());
  if (s.truncated()) out.mark_truncated();
  return out;
}

PolySliceFunction times_right(const PolySliceFunction& f, const Quaternion& c) {
  std::vector<RegularSeries> out;
  out.reserve(f.components().size());
  for (const auto& comp : f.components()) out.push_back(times_right(comp, c));
  return PolySliceFunction(std::move(out));
}

Quaternion eval_regular(const RegularSeries& s, const Quaternion& q) {
  require_inside(s.radius(), q);
  return horner(s.coeffs(), q);
}

Quaternion eval_poly(const PolySliceFunction& f, const Quaternion& q) {
  require_inside(f.radius(), q);
  const Quaternion qbar = conj(q);
  Quaternion qbar_k = basis::one;
  Quaternion total{};
  for (const auto& comp : f.components()) {
    total += qbar_k * horner(comp.coeffs(), q);
    qbar_k = qbar_k * qbar;
  }
  return total;
}

RegularSeries slice_derivative(const RegularSeries& s) {
  std::vector<Quaternion> out;
  const auto& a = s.coeffs();
  for (std::size_t n = 1; n < a.size(); ++n) out.push_back(static_cast<double>(n) * a[n]);
  RegularSeries d(std::move(out), s.radius(), s.cap());
  if (s.truncated()) d.mark_truncated();
  return d;
}

Quaternion dbar_power_numeric(const QuaternionFunction& f, const ImaginaryUnit& unit, double x,
                              double y, int order, double h, int richardson_levels) {
  if (order < 1 || order > kMaxDbarOrder) {
    throw Error(ErrorCode::InvalidOrder,
                "dbar order must lie in [1, 4], got " + std::to_string(order));
  }
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidSize, "finite-difference step must be positive");
  if (richardson_levels < 0) throw Error(ErrorCode::InvalidSize, "negative Richardson depth");

  // Romberg table over steps h, h/2, h/4, ... eliminating h^2, h^4, ...
  std::vector<Quaternion> table;
  for (int l = 0; l <= richardson_levels; ++l) {
    table.push_back(dbar_power_raw(f, unit, x, y, order, h / std::pow(2.0, l)));
  }
  for (int l = 1; l <= richardson_levels; ++l) {
    const double factor = std::pow(4.0, l);
    for (std::size_t m = 0; m + 1 < table.size(); ++m) {
      table[m] = (factor * table[m + 1] - table[m]) / (factor - 1.0);
    }
    table.pop_back();
  }
  return table.front();
}

SplitPair split(const PolySliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J) {
  require_orthogonal(I, J);
  std::vector<std::vector<Complex>> F, G;
  std::size_t cap = kDefaultCap;
  for (const auto& comp : f.components()) {
    cap = std::max(cap, comp.cap());
    auto& fc = F.emplace_back();
    auto& gc = G.emplace_back();
    for (const Quaternion& a : comp.coeffs()) {
      const auto c = basis_coords(a, I, J);
      fc.emplace_back(c[0], c[1]);
      gc.emplace_back(c[2], c[3]);
    }
  }
  return {ComplexPolySeries(std::move(F), cap), ComplexPolySeries(std::move(G), cap)};
}

std::array<ComplexPolySeries, 4> refined_split(const PolySliceFunction& f, const ImaginaryUnit& I,
                                               const ImaginaryUnit& J) {
  require_orthogonal(I, J);
  std::array<std::vector<std::vector<Complex>>, 4> parts;
  std::size_t cap = kDefaultCap;
  for (const auto& comp : f.components()) {
    cap = std::max(cap, comp.cap());
    for (auto& p : parts) p.emplace_back();
    for (const Quaternion& a : comp.coeffs()) {
      const auto c = basis_coords(a, I, J);
      for (int l = 0; l < 4; ++l) parts[l].back().emplace_back(c[l], 0.0);
    }
  }
  return {ComplexPolySeries(std::move(parts[0]), cap), ComplexPolySeries(std::move(parts[1]), cap),
          ComplexPolySeries(std::move(parts[2]), cap), ComplexPolySeries(std::move(parts[3]), cap)};
}

Quaternion representation_combine(const Quaternion& f_plus, const Quaternion& f_minus,
                                  const ImaginaryUnit& I, const ImaginaryUnit& J) {
  return 0.5 * (f_plus + f_minus) + (I.value() * J.value()) * (0.5 * (f_minus - f_plus));
}

SliceComponents slice_components(const PolySliceFunction& f, const ImaginaryUnit& K, double x,
                                 double y) {
  const Quaternion plus = eval_poly(f, embed(K, x, y));
  const Quaternion minus = eval_poly(f, embed(K, x, -y));
  return {0.5 * (plus + minus), K.value() * (0.5 * (minus - plus))};
}

PolySliceFunction extend(const ComplexPolySeries& h, const ImaginaryUnit& I, double radius) {
  std::vector<RegularSeries> comps;
  comps.reserve(h.components().size());
  for (const auto& hc : h.components()) {
    std::vector<Quaternion> coeffs;
    coeffs.reserve(hc.size());
    for (const Complex& c : hc) coeffs.push_back(to_slice(c, I));
    comps.emplace_back(std::move(coeffs), radius, h.cap());
  }
  return PolySliceFunction(std::move(comps));
}

bool is_intrinsic(const PolySliceFunction& f, double tol) {
  for (const auto& comp : f.components()) {
    for (const Quaternion& a : comp.coeffs()) {
      if (std::abs(a.x1) > tol || std::abs(a.x2) > tol || std::abs(a.x3) > tol) return false;
    }
  }
  return true;
}

RegularSeries star(const RegularSeries& a, const RegularSeries& b) {
  const std::size_t cap = std::min(a.cap(), b.cap());
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  if (ac.empty() || bc.empty()) return RegularSeries({}, std::min(a.radius(), b.radius()), cap);
  const std::size_t full = ac.size() + bc.size() - 1;
  const std::size_t n = std::min(full, cap);
  std::vector<Quaternion> c(n);
  for (std::size_t p = 0; p < ac.size(); ++p) {
    for (std::size_t q = 0; q < bc.size() && p + q < n; ++q) c[p + q] += ac[p] * bc[q];
  }
  RegularSeries out(std::move(c), std::min(a.radius(), b.radius()), cap);
  if (full > cap || a.truncated() || b.truncated()) out.mark_truncated();
  return out;
}

PolySliceFunction star_n(const PolySliceFunction& f, const PolySliceFunction& g) {
  if (f.order() != g.order()) {
    throw Error(ErrorCode::OrderMismatch, "star_N needs equal orders: " +
                                              std::to_string(f.order()) + " vs " +
                                              std::to_string(g.order()));
  }
  std::vector<RegularSeries> out;
  out.reserve(f.order());
  for (int k = 0; k < f.order(); ++k) out.push_back(star(f.component(k), g.component(k)));
  return PolySliceFunction(std::move(out));
}

PolySliceFunction fit_on_slice(std::span<const SlicePoint> points,
                               std::span<const Quaternion> values, const ImaginaryUnit& I,
                               int order, int degree, double radius) {
  if (order < 1) throw Error(ErrorCode::InvalidOrder, "order must be >= 1");
  if (degree < 0) throw Error(ErrorCode::InvalidSize, "degree must be >= 0");
  const std::size_t unknowns = static_cast<std::size_t>(order) * (degree + 1);
  if (points.size() != values.size() || points.size() < unknowns) {
    throw Error(ErrorCode::InvalidSize, "need at least (degree + 1) * order sample values");
  }
  const ImaginaryUnit J = orthogonal_unit(I);
  const Eigen::Index rows = static_cast<Eigen::Index>(points.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(unknowns);

  // Column k * (degree + 1) + n holds conj(z)^k z^n.
  Eigen::MatrixXcd design(rows, cols);
  Eigen::MatrixXcd rhs(rows, 2);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Complex z{points[r].x, points[r].y};
    Complex zbar_k{1.0, 0.0};
    for (int k = 0; k < order; ++k) {
      Complex zn = zbar_k;
      for (int n = 0; n <= degree; ++n) {
        design(r, k * (degree + 1) + n) = zn;
        zn *= z;
      }
      zbar_k *= std::conj(z);
    }
    const auto c = basis_coords(values[r], I, J);
    rhs(r, 0) = Complex{c[0], c[1]};
    rhs(r, 1) = Complex{c[2], c[3]};
  }
  const Eigen::MatrixXcd sol = design.colPivHouseholderQr().solve(rhs);

  const Quaternion IJ = I.value() * J.value();
  std::vector<RegularSeries> comps;
  for (int k = 0; k < order; ++k) {
    std::vector<Quaternion> coeffs;
    for (int n = 0; n <= degree; ++n) {
      const Eigen::Index idx = k * (degree + 1) + n;
      const Complex a = sol(idx, 0);
      const Complex b = sol(idx, 1);
      coeffs.push_back(Quaternion(a.real()) + a.imag() * I.value() + b.real() * J.value() +
                       b.imag() * IJ);
    }
    comps.emplace_back(std::move(coeffs), radius);
  }
  return PolySliceFunction(std::move(comps));
}

}  // namespace slicepoly

#include "slicepoly/random.hpp"

#include <cmath>

namespace slicepoly {

double RandomData::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

int RandomData::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Quaternion RandomData::quaternion(double scale) {
  const double a = uniform(-1.0, 1.0);
  const double b = uniform(-1.0, 1.0);
  const double c = uniform(-1.0, 1.0);
  const double d = uniform(-1.0, 1.0);
  return Quaternion(a, b, c, d) * scale;
}

ImaginaryUnit RandomData::unit() {
  std::normal_distribution<double> gauss;
  for (;;) {
    const double b = gauss(rng_);
    const double c = gauss(rng_);
    const double d = gauss(rng_);
    const Quaternion v{0.0, b, c, d};
    if (modulus(v) > 1e-3) return ImaginaryUnit::normalized(v);
  }
}

Quaternion RandomData::point_in_ball(double radius) {
  for (;;) {
    const Quaternion q = quaternion(radius);
    if (modulus(q) <= radius) return q;
  }
}

SlicePoint RandomData::point_in_disk(double radius) {
  for (;;) {
    const double x = uniform(-radius, radius);
    const double y = uniform(-radius, radius);
    if (x * x + y * y <= radius * radius) return {x, y};
  }
}

RegularSeries RandomData::series(int degree, double radius) {
  std::vector<Quaternion> coeffs;
  for (int n = 0; n <= degree; ++n) coeffs.push_back(quaternion());
  return RegularSeries(std::move(coeffs), radius);
}

PolySliceFunction RandomData::function(int max_order, int max_degree, double radius) {
  const int order = integer(1, max_order);
  std::vector<RegularSeries> comps;
  for (int k = 0; k < order; ++k) comps.push_back(series(integer(0, max_degree), radius));
  return PolySliceFunction(std::move(comps));
}

PolySliceFunction RandomData::function_exact(int order, int degree, double radius) {
  std::vector<RegularSeries> comps;
  for (int k = 0; k < order; ++k) comps.push_back(series(degree, radius));
  return PolySliceFunction(std::move(comps));
}

PolySliceFunction RandomData::intrinsic_function(int order, int degree, double radius) {
  std::vector<RegularSeries> comps;
  for (int k = 0; k < order; ++k) {
    std::vector<Quaternion> coeffs;
    for (int n = 0; n <= degree; ++n) coeffs.emplace_back(uniform(-1.0, 1.0));
    comps.emplace_back(std::move(coeffs), radius);
  }
  return PolySliceFunction(std::move(comps));
}

}  // namespace slicepoly

#pragma once

#include <cstdint>
#include <random>

#include "slicepoly/quaternion.hpp"
#include "slicepoly/slice_poly.hpp"

namespace slicepoly {

/// Seeded source of test data.  Coefficients are uniform in [-1, 1]^4.
class RandomData {
 public:
  explicit RandomData(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive

  Quaternion quaternion(double scale = 1.0);
  ImaginaryUnit unit();
  /// Uniform point of the ball |q| <= radius.
  Quaternion point_in_ball(double radius);
  /// Uniform point of the disk |z| <= radius, as slice coordinates.
  SlicePoint point_in_disk(double radius);

  RegularSeries series(int degree, double radius = kInfiniteRadius);
  /// Order in [1, max_order], every component of degree <= max_degree.
  PolySliceFunction function(int max_order, int max_degree, double radius = kInfiniteRadius);
  PolySliceFunction function_exact(int order, int degree, double radius = kInfiniteRadius);
  /// Same shape as function_exact with real coefficients.
  PolySliceFunction intrinsic_function(int order, int degree, double radius = kInfiniteRadius);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace slicepoly

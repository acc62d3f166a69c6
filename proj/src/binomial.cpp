#include "slicepoly/binomial.hpp"

#include <string>

#include "slicepoly/error.hpp"

namespace slicepoly {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxBinomialN) {
    throw Error(ErrorCode::InvalidOrder,
                "binomial coefficient out of exact range: n = " + std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t c = 1;
  // c * (n - k + m) is divisible by m at every step.
  for (int m = 1; m <= k; ++m) c = c * static_cast<std::uint64_t>(n - k + m) / m;
  return c;
}

}  // namespace slicepoly

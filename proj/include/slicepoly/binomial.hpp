#pragma once

#include <cstdint>

namespace slicepoly {

/// Largest n accepted by binomial(); C(20, 10) still fits comfortably.
inline constexpr int kMaxBinomialN = 20;

/// Exact C(n, k) by integer recurrence.  Returns 0 for k < 0 or k > n and
/// throws InvalidOrder for n outside [0, kMaxBinomialN].
std::uint64_t binomial(int n, int k);

}  // namespace slicepoly

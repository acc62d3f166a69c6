#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slicepoly::cli {

/// Exit codes: 0 success, 1 verification failure, 2 invalid flags,
/// 3 domain error (point outside the ball, series divergence, ...).
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicepoly::cli

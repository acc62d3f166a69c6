#pragma once

/**
 * @file verify.hpp
 * @brief Seeded verification suites over random data: structural identities
 *        of slice polyanalytic functions, and kernel/reproduction checks for
 *        the Fock and Bergman spaces.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace slicepoly {

enum class Suite { structure, fock, bergman, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct VerifyOptions {
  std::uint64_t seed = 7;
  /// Random cases per check family; 0 runs nothing.
  int samples = 100;
  /// Quadrature size: gauss_plane_rule(nodes) and disk_rule(nodes, 2 nodes).
  /// 0 selects the defaults (80 and 128 x 256).
  int nodes = 0;
};

struct VerifyReport {
  std::string suite;
  int cases_run = 0;
  int cases_passed = 0;
  /// Largest residual over all cases, each measured in the units its
  /// tolerance is stated in (absolute, relative or bound violation).
  double worst_residual = 0.0;
  std::int64_t elapsed_ms = 0;

  bool ok() const { return cases_passed == cases_run; }
  nlohmann::ordered_json to_json() const;
};

VerifyReport run_verify(Suite suite, const VerifyOptions& options);

}  // namespace slicepoly

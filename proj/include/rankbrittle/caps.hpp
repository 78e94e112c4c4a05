#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "rankbrittle/isomorphism.hpp"

namespace rankbrittle {

/// Size limits for the exact solvers. Exceeding one raises ResourceError.
struct SolverCaps {
  int rbrit1_max_n = 20;
  int rbrit2_max_n = 10;
  int rbrit_max_n = 8;  // depth >= 3
  int rank_depth_max_n = 8;
  int beta_max_n = 12;
  int lrw_max_n = 20;
  int vertex_minor_max_n = 12;
  std::size_t orbit_cap = 1'000'000;
  std::uint64_t iso_node_limit = kDefaultIsoNodeLimit;

  /// Comma-separated `key=value` overrides, e.g. "rbrit2=12,orbit=2000000".
  /// Keys: rbrit1 rbrit2 rbrit rankdepth beta lrw vm orbit iso.
  void apply_overrides(std::string_view spec);

  /// Defaults, overridden by the RANKBRITTLE_CAPS environment variable if set.
  static SolverCaps from_env();
};

struct SolverOptions {
  SolverCaps caps;
  /// Worker threads for the root-level search. Results do not depend on this value.
  int threads = 1;
};

}  // namespace rankbrittle

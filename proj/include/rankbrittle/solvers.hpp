#pragma once

#include <optional>

#include "rankbrittle/caps.hpp"
#include "rankbrittle/decomposition.hpp"
#include "rankbrittle/graph.hpp"

namespace rankbrittle {

// Exact solvers for the width parameters. All of them return a witness that
// re-evaluates to the returned value, and raise ResourceError above their caps.
//
// Tie-breaking. Set partitions of a vertex set S are enumerated by choosing the
// block that contains the least unassigned vertex, trying the remaining vertices
// of that block as a bitmask in increasing numeric order. Among optimal partitions
// the first one in this order is returned (so the all-singletons partition wins
// any tie it takes part in). Nested blocks are resolved the same way, bottom-up.

struct DecompositionResult {
  int value = 0;
  /// Absent for graphs with fewer than two vertices (no decomposition exists).
  std::optional<Decomposition> witness;
};

struct PartitionResult {
  int value = 0;
  Partition witness;
};

/// Depth-d rank-brittleness: least width of a decomposition of radius <= d.
/// Searches rooted hierarchies of depth <= d; d = 1 is the max cut-rank over all subsets.
DecompositionResult rbrit_exact(const Graph& g, int depth, const SolverOptions& options = {});

/// Rank-depth: least k admitting a decomposition of radius <= k and width <= k.
DecompositionResult rank_depth_exact(const Graph& g, const SolverOptions& options = {});

/// Rank k-brittleness: least rho-width of a partition into parts of size <= k.
PartitionResult beta_rho_k(const Graph& g, int k, const SolverOptions& options = {});

/// Linear rank-width by dynamic programming over vertex subsets:
/// best(S) = min over v in S of max(best(S - v), rho(S)). Ties pick the least v.
LinearLayout lrw_exact(const Graph& g, const SolverOptions& options = {});

}  // namespace rankbrittle

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankbrittle/graph.hpp"

namespace rankbrittle {

inline constexpr std::uint64_t kDefaultIsoNodeLimit = 10'000'000;

enum class IsoOutcome { Isomorphic, NotIsomorphic, LimitExceeded };

struct IsoResult {
  IsoOutcome outcome = IsoOutcome::NotIsomorphic;
  /// When isomorphic: vertex v of the first graph maps to mapping[v] of the second.
  std::vector<int> mapping;
};

/// Color refinement (degree, then iterated neighbor-color multisets) on both graphs
/// jointly, followed by backtracking over color-compatible assignments. Never
/// guesses: running out of `node_limit` search nodes yields LimitExceeded.
IsoResult find_isomorphism(const Graph& g, const Graph& h,
                           std::uint64_t node_limit = kDefaultIsoNodeLimit);

/// Throws ResourceError when the node limit is exceeded.
bool are_isomorphic(const Graph& g, const Graph& h,
                    std::uint64_t node_limit = kDefaultIsoNodeLimit);

/// Cheap necessary conditions: order, edge count, degree sequence.
bool invariants_match(const Graph& g, const Graph& h);

/// Some vertex set S with g[S] isomorphic to `pattern`, searched over subsets in
/// increasing bitmask order of the complement. nullopt if none exists.
std::optional<VertexSet> find_induced_subgraph(const Graph& g, const Graph& pattern);

/// Maximal twin classes (v, w twins iff N(v) - {v,w} == N(w) - {v,w}), sorted by least element.
std::vector<VertexSet> twin_classes(const Graph& g);

bool are_twins(const Graph& g, int v, int w);

}  // namespace rankbrittle

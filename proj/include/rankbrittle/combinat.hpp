#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "rankbrittle/families.hpp"
#include "rankbrittle/graph.hpp"

namespace rankbrittle {

using IntSet = std::vector<int>;  // sorted, no repeats

struct Sunflower {
  std::vector<IntSet> members;
  IntSet core;
};

/// Every pairwise intersection of the members equals the core, and members are distinct.
bool is_sunflower(const Sunflower& s);

/// Erdős–Rado recursion: take a maximal pairwise-disjoint subfamily greedily (input
/// order); if it has fewer than p sets, recurse on the sets through the most frequent
/// element (least element on ties). Succeeds whenever |family| > k!(p-1)^k.
/// Duplicate sets are ignored. Throws InputError on sets of unequal size or k < 1.
std::optional<Sunflower> find_sunflower(const std::vector<IntSet>& family, int p);

/// k!(p-1)^k, saturating at UINT64_MAX.
std::uint64_t sunflower_threshold(int k, int p);

/// Symmetric edge coloring of K_m: color[i][j] for i != j; the diagonal is ignored.
using EdgeColoring = std::vector<std::vector<int>>;

/// First n-subset (lexicographic in vertex order) whose edges share one color, by
/// backtracking per color in increasing color order.
std::optional<std::vector<int>> monochromatic_subset(const EdgeColoring& coloring, int n);

struct BipartitePattern {
  std::vector<int> s;  // ordered s_1..s_n
  std::vector<int> t;  // ordered t_1..t_n
  ProductKind kind = ProductKind::Match;
};

/// s_i t_j adjacent exactly per `kind`.
bool is_bipartite_pattern(const Graph& g, const BipartitePattern& p);

/// Searches for n-subsets of S and T whose bipartite adjacency is a matching, a half
/// graph, or an anti-matching under some ordering, trying the kinds in that order.
/// Throws ResourceError when `node_limit` search nodes are spent without an answer.
std::optional<BipartitePattern> bipartite_pattern(const Graph& g, VertexSet s, VertexSet t, int n,
                                                  std::uint64_t node_limit = 50'000'000);

struct HighDegreeVertex {
  int vertex;
};
struct InducedPath {
  std::vector<int> vertices;
};
using PathOrDegree = std::variant<HighDegreeVertex, InducedPath>;

bool is_induced_path(const Graph& g, const std::vector<int>& path);

/// A vertex of degree >= k if one exists (least index), else an induced path on l
/// vertices by depth-first search, else nullopt. Throws InputError on disconnected
/// graphs or k <= 3 or l <= 0. A result is guaranteed when |V| >= (k-1)(k-2)^(l-2)/(k-3).
std::optional<PathOrDegree> path_or_high_degree(const Graph& g, int k, int l);

/// Longest induced path by exhaustive search (vertices in path order).
std::vector<int> longest_induced_path(const Graph& g);

}  // namespace rankbrittle

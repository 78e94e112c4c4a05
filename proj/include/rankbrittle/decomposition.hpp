#pragma once

#include <vector>

#include "rankbrittle/graph.hpp"

namespace rankbrittle {

/// Ordered list of disjoint nonempty vertex sets covering V(G).
struct Partition {
  std::vector<VertexSet> parts;
  bool operator==(const Partition&) const = default;
};

/// Throws InputError unless `p` is a partition of V(g).
void validate_partition(const Graph& g, const Partition& p);

/// rho_G-width: max over all unions of parts of their cut-rank (2^m unions).
int rho_width(const Graph& g, const Partition& p);

/// A node of a rooted decomposition tree. Leaves carry a vertex; internal nodes
/// carry children. The tree is kept rooted at a center, so its depth bounds the radius.
struct DecompositionNode {
  int vertex = -1;
  std::vector<DecompositionNode> children;

  static DecompositionNode leaf(int v) { return DecompositionNode{v, {}}; }
  bool is_leaf() const { return vertex >= 0; }
  bool operator==(const DecompositionNode&) const = default;
};

struct Decomposition {
  DecompositionNode root;

  int depth() const;
  bool operator==(const Decomposition&) const = default;
};

/// Leaves biject with V(g), the root has at least two children (so it is an
/// internal node of the unrooted tree), every other internal node has a child.
/// Throws InputError otherwise. A graph with fewer than two vertices has no decomposition.
void validate_decomposition(const Graph& g, const Decomposition& d);

/// Vertex set mapped to the leaves below `node`.
VertexSet leaf_set(const DecompositionNode& node);

/// Width of one internal node: max cut-rank over unions of its children's leaf
/// sets. The part outside the subtree is folded in through rho(X) = rho(V - X).
int node_width(const Graph& g, const DecompositionNode& node);

/// Max node width over all internal nodes; validates first.
int decomposition_width(const Graph& g, const Decomposition& d);

/// Star: root with one leaf per vertex. Radius 1.
Decomposition star_decomposition(int n);

/// Root -> one node per part -> leaves. Radius 2.
Decomposition two_level_decomposition(const Partition& p);

struct LinearLayout {
  std::vector<int> order;
  int width = 0;
  bool operator==(const LinearLayout&) const = default;
};

/// Max cut-rank over proper nonempty prefixes; 0 for graphs with one vertex.
/// Throws InputError unless `order` is a permutation of V(g).
int layout_width(const Graph& g, const std::vector<int>& order);

/// Orders vertices by their leaves' first appearance in a depth-first traversal of
/// `d` (children visited in stored order). For a (k,k)-decomposition the width is
/// at most k^2.
LinearLayout dfs_layout(const Graph& g, const Decomposition& d);

}  // namespace rankbrittle

#include "rankbrittle/decomposition.hpp"

#include <algorithm>

#include "rankbrittle/cut_rank.hpp"
#include "rankbrittle/errors.hpp"

namespace rankbrittle {

void validate_partition(const Graph& g, const Partition& p) {
  VertexSet seen;
  for (VertexSet part : p.parts) {
    if (part.empty()) throw InputError("partition has an empty part");
    if (!part.is_subset_of(g.vertices())) throw InputError("partition part has vertices outside the graph");
    if (!(part & seen).empty()) throw InputError("partition parts overlap");
    seen |= part;
  }
  if (seen != g.vertices()) throw InputError("partition does not cover every vertex");
}

namespace {

// Max cut-rank over all unions of `sets`, by incremental doubling of the union list.
int max_union_rank(const Graph& g, const std::vector<VertexSet>& sets) {
  if (sets.size() > 30) throw ResourceError("too many parts to enumerate all unions");
  std::vector<VertexSet> unions{VertexSet{}};
  unions.reserve(std::size_t{1} << sets.size());
  int best = 0;
  for (VertexSet s : sets) {
    const std::size_t k = unions.size();
    for (std::size_t i = 0; i < k; ++i) {
      const VertexSet u = unions[i] | s;
      best = std::max(best, cut_rank(g, u));
      unions.push_back(u);
    }
  }
  return best;
}

int node_depth(const DecompositionNode& node) {
  int d = 0;
  for (const auto& c : node.children) d = std::max(d, 1 + node_depth(c));
  return d;
}

void collect(const Graph& g, const DecompositionNode& node, bool is_root, VertexSet& seen) {
  if (node.is_leaf()) {
    if (!node.children.empty()) throw InputError("decomposition leaf has children");
    if (node.vertex >= g.order()) throw InputError("decomposition leaf " + std::to_string(node.vertex) + " out of range");
    if (seen.contains(node.vertex)) throw InputError("vertex " + std::to_string(node.vertex) + " appears on two leaves");
    seen.insert(node.vertex);
    return;
  }
  if (node.children.empty()) throw InputError("decomposition has a leaf without a vertex");
  if (is_root && node.children.size() < 2) throw InputError("decomposition root needs at least two children");
  for (const auto& c : node.children) collect(g, c, false, seen);
}

int max_node_width(const Graph& g, const DecompositionNode& node) {
  if (node.is_leaf()) return 0;
  int best = node_width(g, node);
  for (const auto& c : node.children) best = std::max(best, max_node_width(g, c));
  return best;
}

void dfs_leaves(const DecompositionNode& node, std::vector<int>& out) {
  if (node.is_leaf()) {
    out.push_back(node.vertex);
    return;
  }
  for (const auto& c : node.children) dfs_leaves(c, out);
}

}  // namespace

int rho_width(const Graph& g, const Partition& p) {
  validate_partition(g, p);
  return max_union_rank(g, p.parts);
}

int Decomposition::depth() const { return node_depth(root); }

void validate_decomposition(const Graph& g, const Decomposition& d) {
  if (d.root.is_leaf()) throw InputError("decomposition needs at least one internal node");
  VertexSet seen;
  collect(g, d.root, true, seen);
  if (seen != g.vertices()) throw InputError("decomposition leaves do not cover every vertex");
}

VertexSet leaf_set(const DecompositionNode& node) {
  if (node.is_leaf()) return VertexSet::singleton(node.vertex);
  VertexSet s;
  for (const auto& c : node.children) s |= leaf_set(c);
  return s;
}

int node_width(const Graph& g, const DecompositionNode& node) {
  std::vector<VertexSet> sets;
  sets.reserve(node.children.size());
  for (const auto& c : node.children) sets.push_back(leaf_set(c));
  return max_union_rank(g, sets);
}

int decomposition_width(const Graph& g, const Decomposition& d) {
  validate_decomposition(g, d);
  return max_node_width(g, d.root);
}

Decomposition star_decomposition(int n) {
  Decomposition d;
  for (int v = 0; v < n; ++v) d.root.children.push_back(DecompositionNode::leaf(v));
  return d;
}

Decomposition two_level_decomposition(const Partition& p) {
  Decomposition d;
  for (VertexSet part : p.parts) {
    DecompositionNode child;
    for (int v : part) child.children.push_back(DecompositionNode::leaf(v));
    d.root.children.push_back(std::move(child));
  }
  return d;
}

int layout_width(const Graph& g, const std::vector<int>& order) {
  VertexSet seen;
  for (int v : order) {
    if (v < 0 || v >= g.order() || seen.contains(v)) throw InputError("layout is not a permutation of the vertices");
    seen.insert(v);
  }
  if (seen != g.vertices()) throw InputError("layout is not a permutation of the vertices");
  int width = 0;
  VertexSet prefix;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    prefix.insert(order[i]);
    width = std::max(width, cut_rank(g, prefix));
  }
  return width;
}

LinearLayout dfs_layout(const Graph& g, const Decomposition& d) {
  validate_decomposition(g, d);
  LinearLayout out;
  dfs_leaves(d.root, out.order);
  out.width = layout_width(g, out.order);
  return out;
}

}  // namespace rankbrittle

#pragma once

#include <cstdint>
#include <istream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rankbrittle/vertex_set.hpp"

namespace rankbrittle {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 (n <= 64), one adjacency bitmask per row.
///
/// Each vertex also carries an integer label. Labels start as the vertex index and
/// survive vertex deletion, so a vertex keeps its identity while indices shift.
/// Equality compares adjacency only; use `same_labels` to compare labels as well.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return neighbors(v).size(); }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  int edge_count() const;
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // sorted descending

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void set_edge(int u, int v, bool on);
  void toggle_edge(int u, int v);

  int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& labels() const { return labels_; }
  void set_labels(std::vector<int> labels);
  /// Index of the vertex carrying `label`, or -1.
  int index_of_label(int label) const;

  /// Subgraph induced on `keep`; vertices keep their relative order and labels.
  Graph induced(VertexSet keep) const;
  Graph without(VertexSet drop) const { return induced(vertices() - drop); }
  Graph without(int v) const { return without(VertexSet::singleton(v)); }

  /// Graph whose vertex i is this graph's vertex perm[i]. Labels follow their vertex.
  Graph permuted(const std::vector<int>& perm) const;

  bool is_connected() const;
  std::vector<VertexSet> components() const;

  bool operator==(const Graph& other) const { return rows_ == other.rows_; }

  const std::vector<VertexSet>& rows() const { return rows_; }

private:
  void check_vertex(int v) const;

  std::vector<VertexSet> rows_;
  std::vector<int> labels_;
};

bool same_labels(const Graph& a, const Graph& b);

/// Throws InputError on loops, out-of-range endpoints, or n outside [0, 64].
Graph graph_from_edges(int n, const std::vector<Edge>& edges);

Graph complement(const Graph& g);

/// Disjoint union; `b` is placed after `a`. Labels are reset to indices.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Erdős–Rényi G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// Edge-list text: first line `n`, then one `u v` pair per line. Blank lines and `#` comments are skipped.
Graph parse_edge_list(std::istream& in);
std::string format_edge_list(const Graph& g);

}  // namespace rankbrittle

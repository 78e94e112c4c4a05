#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rankbrittle/caps.hpp"
#include "rankbrittle/graph.hpp"

namespace rankbrittle {

/// One replay step. `vertex` is a vertex label (see Graph), so steps stay valid
/// while deletions shift indices.
struct VMStep {
  enum class Op { LocalComplement, Delete };
  Op op = Op::LocalComplement;
  int vertex = 0;

  static VMStep lc(int v) { return {Op::LocalComplement, v}; }
  static VMStep del(int v) { return {Op::Delete, v}; }
  bool operator==(const VMStep&) const = default;
};

struct VMWitness {
  std::vector<VMStep> steps;

  bool deletes() const;
  VMWitness& operator+=(const VMWitness& more);
  bool operator==(const VMWitness&) const = default;
};

/// G*v: complements the subgraph induced on N(v). `v` is an index.
Graph local_complement(const Graph& g, int v);

/// G*u*v*u. Throws InputError unless uv is an edge.
Graph pivot(const Graph& g, int u, int v);

/// Replays steps in order, resolving each label against the current graph.
/// Throws WitnessError when a step names a vertex that is not present.
Graph apply_witness(const Graph& g, const VMWitness& w);

/// Breadth-first closure under single local complementations, deduplicated by
/// labeled adjacency. Successors are generated by complementing at index 0, 1, ...
/// so each graph's witness is the first one found at minimum depth.
struct LocalOrbit {
  std::vector<Graph> graphs;
  std::vector<VMWitness> witnesses;  // witnesses[i] replays the source to graphs[i]
  bool complete = false;             // false when truncated at the cap
};

LocalOrbit local_orbit(const Graph& g, std::size_t cap);

struct LocalEquivalence {
  VMWitness witness;         // local complementations only
  std::vector<int> mapping;  // isomorphism from apply_witness(g, witness) onto h
};

/// Searches the orbit of `g` for a graph isomorphic to `h`. Returns nullopt when
/// the complete orbit has none; throws ResourceError when the orbit cap runs out first.
std::optional<LocalEquivalence> locally_equivalent(const Graph& g, const Graph& h,
                                                   const SolverCaps& caps = {});

/// Labeled variant: apply_witness(g, w) == h exactly.
std::optional<VMWitness> locally_equivalent_labeled(const Graph& g, const Graph& h,
                                                    const SolverCaps& caps = {});

/// Some witness whose replay on `g` is isomorphic to `h`, or nullopt.
///
/// Recursion over (graph, kept set): the highest-degree undecided vertex v (least
/// index on ties) is removed as G - v, G*v - v, or pivot(G, v, w) - v with w the
/// least-index neighbor, or else marked kept. Once |V| = |V(h)| the remaining graph
/// is tested for local equivalence with `h`.
std::optional<VMWitness> has_vertex_minor_isomorphic(const Graph& g, const Graph& h,
                                                     const SolverCaps& caps = {});

struct TwinReduction {
  Graph graph;
  std::vector<int> deleted;  // labels, in deletion order
};

/// While some twin class has three or more members, deletes its least-index member.
TwinReduction reduce_triple_twin_steps(const Graph& g);
inline Graph reduce_triple_twin(const Graph& g) { return reduce_triple_twin_steps(g).graph; }

}  // namespace rankbrittle

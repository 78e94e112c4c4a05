#pragma once

#include <random>
#include <vector>

#include "rankbrittle/decomposition.hpp"
#include "rankbrittle/graph.hpp"

namespace rankbrittle {

/// Evidence that a radius-2 decomposition of nT_{2,n} has width >= ceil(n/2).
///
/// ComponentInPart: a whole component sits below root child `child`; `set` is its
/// n degree-1 vertices, a union of that child's children, inducing a matching of size n.
/// ColorfulUnion: `set` is the union of the root children listed in `colors`; one
/// colorful edge per component is cut by it, giving an identity block in the cut matrix.
struct CutCertificate {
  enum class Kind { ComponentInPart, ColorfulUnion };
  Kind kind = Kind::ColorfulUnion;
  int child = -1;
  std::vector<int> colors;
  VertexSet set;
  int rank = 0;
};

/// Throws InputError unless g is a disjoint union of n copies of T_{2,n} and d is a
/// valid decomposition of g of depth <= 2. The color subset is found by exhaustive
/// search over subsets of the colors that occur on the chosen edges (first hit in
/// increasing bitmask order).
CutCertificate colorful_cut_witness(const Graph& g, const Decomposition& d);

/// Rechecks a certificate from scratch: `set` is a union of children of the named
/// node and its cut-rank is at least `bound`.
bool verify_cut_certificate(const Graph& g, const Decomposition& d, const CutCertificate& c, int bound);

/// Random decomposition of depth <= 2 on n >= 2 vertices: the root gets between 2
/// and n children, each a leaf or a node whose children are leaves.
Decomposition random_radius2_decomposition(int n, std::mt19937_64& rng);

}  // namespace rankbrittle

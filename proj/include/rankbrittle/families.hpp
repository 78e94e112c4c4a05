#pragma once

#include <span>
#include <string>
#include <string_view>

#include "rankbrittle/graph.hpp"

namespace rankbrittle {

// Canonical labelings used throughout the library (lemma witnesses rely on them):
//   path(n)            0-1-...-(n-1)
//   cycle(n)           path plus the edge (n-1)-0
//   star(n)            K_{1,n}: center 0, leaves 1..n
//   subdivided_star(n) T_{2,n}: center 0, middles 1..n, leaves n+1..2n, middle i adjacent to leaf n+i
//   copies(k, h)       copy c occupies [c*|h|, (c+1)*|h|)

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph edgeless(int n);
Graph star(int leaves);
Graph subdivided_star(int n);
Graph copies(int k, const Graph& h);

/// Named family lookup: path, cycle, complete, edgeless, star, subdivided_star
/// (alias subdiv_star). Exactly one positive parameter each.
Graph make_family(std::string_view name, std::span<const int> params);

/// Cross edges between G (v_1..v_n) and H (w_1..w_n): v_i w_j is an edge iff
///   Match      i == j
///   AntiMatch  i != j
///   Half       i >= j
enum class ProductKind { Match, AntiMatch, Half };

std::string_view to_string(ProductKind kind);
ProductKind parse_product_kind(std::string_view text);
bool product_cross_edge(ProductKind kind, int i, int j);

/// 2x2 0-1 matrix (a b; c d) of a blown product: for copies i < j,
/// a: G_i-G_j, b: G_i-H_j, c: H_i-G_j, d: H_i-H_j complete (1) or anti-complete (0).
struct LinkMatrix {
  bool a = false, b = false, c = false, d = false;
  bool operator==(const LinkMatrix&) const = default;
};

/// G on indices 0..n-1 followed by H on n..2n-1.
Graph product(const Graph& g, const Graph& h, ProductKind kind);

/// t copies of product(g, h, kind); copy c occupies [2nc, 2n(c+1)), G-part first.
Graph blown_product(const Graph& g, const Graph& h, ProductKind kind, int t, LinkMatrix link);

/// Half graphs used throughout: edgeless/complete sides joined by `kind`.
inline Graph kk_product(bool top_clique, bool bottom_clique, ProductKind kind, int n) {
  return product(top_clique ? complete(n) : edgeless(n), bottom_clique ? complete(n) : edgeless(n), kind);
}

}  // namespace rankbrittle

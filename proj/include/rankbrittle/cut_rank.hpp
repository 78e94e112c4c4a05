#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rankbrittle/graph.hpp"

namespace rankbrittle {

/// Rank over GF(2) of a list of 64-bit row vectors.
int gf2_rank(std::span<const std::uint64_t> rows);

/// Cut-rank: GF(2) rank of the S x (V - S) adjacency submatrix. Throws InputError
/// if S has vertices outside the graph.
int cut_rank(const Graph& g, VertexSet s);

/// Cut-rank of every vertex subset, indexed by bitmask. Intended for n <= 24.
class CutRankTable {
public:
  explicit CutRankTable(const Graph& g);

  int order() const { return n_; }
  int operator()(VertexSet s) const { return ranks_[static_cast<std::size_t>(s.bits())]; }
  /// max over nonempty A subset of S of cut_rank(A); the depth-1 brittleness of S.
  int max_subset(VertexSet s) const { return max_sub_[static_cast<std::size_t>(s.bits())]; }

private:
  int n_;
  std::vector<std::uint8_t> ranks_;
  std::vector<std::uint8_t> max_sub_;
};

inline constexpr int kMaxCutRankTableOrder = 24;

}  // namespace rankbrittle

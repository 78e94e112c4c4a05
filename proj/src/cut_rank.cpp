#include "rankbrittle/cut_rank.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "rankbrittle/errors.hpp"

namespace rankbrittle {

int gf2_rank(std::span<const std::uint64_t> rows) {
  std::array<std::uint64_t, 64> pivot{};
  int rank = 0;
  for (std::uint64_t x : rows) {
    while (x != 0) {
      const int h = 63 - std::countl_zero(x);
      if (pivot[static_cast<std::size_t>(h)] == 0) {
        pivot[static_cast<std::size_t>(h)] = x;
        ++rank;
        break;
      }
      x ^= pivot[static_cast<std::size_t>(h)];
    }
  }
  return rank;
}

int cut_rank(const Graph& g, VertexSet s) {
  const VertexSet all = g.vertices();
  if (!s.is_subset_of(all)) throw InputError("cut_rank: vertex set has vertices outside the graph");
  VertexSet rows = s;
  VertexSet cols = all - s;
  if (cols.size() < rows.size()) std::swap(rows, cols);
  std::array<std::uint64_t, 64> buf{};
  std::size_t k = 0;
  for (int v : rows) buf[k++] = (g.neighbors(v) & cols).bits();
  return gf2_rank(std::span<const std::uint64_t>(buf.data(), k));
}

CutRankTable::CutRankTable(const Graph& g) : n_(g.order()) {
  if (n_ > kMaxCutRankTableOrder) throw InputError("cut-rank table limited to 24 vertices");
  const std::size_t size = std::size_t{1} << n_;
  ranks_.resize(size);
  max_sub_.resize(size);
  for (std::size_t m = 0; m < size; ++m) {
    // rho(S) = rho(V - S): fill both halves from the smaller index.
    const std::size_t comp = (size - 1) ^ m;
    if (comp < m) {
      ranks_[m] = ranks_[comp];
    } else {
      ranks_[m] = static_cast<std::uint8_t>(cut_rank(g, VertexSet(m)));
    }
  }
  for (std::size_t m = 0; m < size; ++m) {
    std::uint8_t best = ranks_[m];
    for (std::uint64_t b = m; b != 0; b &= b - 1) {
      best = std::max(best, max_sub_[m & ~(b & (~b + 1))]);
    }
    max_sub_[m] = best;
  }
}

}  // namespace rankbrittle

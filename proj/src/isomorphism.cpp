#include "rankbrittle/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rankbrittle/errors.hpp"

namespace rankbrittle {

namespace {

// Stable coloring of the disjoint union g + h; vertex i of h is at index n + i.
std::vector<int> refine_colors(const Graph& g, const Graph& h) {
  const int n = g.order();
  auto nbrs = [&](int x) { return x < n ? g.neighbors(x) : h.neighbors(x - n); };
  auto offset = [&](int x) { return x < n ? 0 : n; };

  std::vector<int> color(static_cast<std::size_t>(2 * n));
  for (int x = 0; x < 2 * n; ++x) color[static_cast<std::size_t>(x)] = nbrs(x).size();

  int classes = -1;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(2 * n));
    for (int x = 0; x < 2 * n; ++x) {
      auto& s = sig[static_cast<std::size_t>(x)];
      s.push_back(color[static_cast<std::size_t>(x)]);
      std::vector<int> around;
      for (int y : nbrs(x)) around.push_back(color[static_cast<std::size_t>(y + offset(x))]);
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
      ids.emplace(s, 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int x = 0; x < 2 * n; ++x) color[static_cast<std::size_t>(x)] = ids[sig[static_cast<std::size_t>(x)]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

class Matcher {
public:
  Matcher(const Graph& g, const Graph& h, std::vector<int> color, std::uint64_t limit)
      : g_(g), h_(h), n_(g.order()), color_(std::move(color)), limit_(limit) {
    build_order();
    map_.assign(static_cast<std::size_t>(n_), -1);
  }

  IsoOutcome run() {
    if (search(0)) return IsoOutcome::Isomorphic;
    return exceeded_ ? IsoOutcome::LimitExceeded : IsoOutcome::NotIsomorphic;
  }

  const std::vector<int>& mapping() const { return map_; }

private:
  int gcolor(int v) const { return color_[static_cast<std::size_t>(v)]; }
  int hcolor(int w) const { return color_[static_cast<std::size_t>(n_ + w)]; }

  // Smallest color classes first; then prefer vertices adjacent to those already placed.
  void build_order() {
    std::map<int, int> class_size;
    for (int v = 0; v < n_; ++v) ++class_size[gcolor(v)];
    VertexSet placed;
    while (static_cast<int>(order_.size()) < n_) {
      int best = -1;
      std::tuple<int, int, int> best_key{};
      for (int v = 0; v < n_; ++v) {
        if (placed.contains(v)) continue;
        std::tuple<int, int, int> key{-(g_.neighbors(v) & placed).size(), class_size[gcolor(v)], v};
        if (best < 0 || key < best_key) {
          best = v;
          best_key = key;
        }
      }
      order_.push_back(best);
      placed.insert(best);
    }
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > limit_) {
      exceeded_ = true;
      return false;
    }
    const int v = order_[depth];
    for (int w = 0; w < n_; ++w) {
      if (used_.contains(w) || hcolor(w) != gcolor(v)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const int u = order_[k];
        ok = g_.adjacent(u, v) == h_.adjacent(map_[static_cast<std::size_t>(u)], w);
      }
      if (!ok) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_.insert(w);
      if (search(depth + 1)) return true;
      used_.erase(w);
      map_[static_cast<std::size_t>(v)] = -1;
      if (exceeded_) return false;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<int> color_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  std::vector<int> order_;
  std::vector<int> map_;
  VertexSet used_;
};

}  // namespace

bool invariants_match(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.edge_count() == h.edge_count() &&
         g.degree_sequence() == h.degree_sequence();
}

IsoResult find_isomorphism(const Graph& g, const Graph& h, std::uint64_t node_limit) {
  if (!invariants_match(g, h)) return {};
  const int n = g.order();
  auto color = refine_colors(g, h);
  std::vector<int> gc(color.begin(), color.begin() + n);
  std::vector<int> hc(color.begin() + n, color.end());
  std::sort(gc.begin(), gc.end());
  std::sort(hc.begin(), hc.end());
  if (gc != hc) return {};

  Matcher m(g, h, std::move(color), node_limit);
  IsoResult r;
  r.outcome = m.run();
  if (r.outcome == IsoOutcome::Isomorphic) r.mapping = m.mapping();
  return r;
}

bool are_isomorphic(const Graph& g, const Graph& h, std::uint64_t node_limit) {
  auto r = find_isomorphism(g, h, node_limit);
  if (r.outcome == IsoOutcome::LimitExceeded) {
    throw ResourceError("isomorphism search exceeded " + std::to_string(node_limit) + " nodes");
  }
  return r.outcome == IsoOutcome::Isomorphic;
}

std::optional<VertexSet> find_induced_subgraph(const Graph& g, const Graph& pattern) {
  const int n = g.order();
  const int k = pattern.order();
  if (k > n) return std::nullopt;
  const int edges = pattern.edge_count();
  // Enumerate k-subsets in colex order (Gosper's hack).
  if (k == 0) return VertexSet{};
  std::uint64_t s = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = VertexSet::range(n).bits();
  while (true) {
    VertexSet set(s);
    int inside = 0;
    for (int v : set) inside += (g.neighbors(v) & set).size();
    if (inside / 2 == edges && are_isomorphic(g.induced(set), pattern)) return set;
    if (k == n) break;
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0 || (r & ~limit) != 0) break;
    s = (((r ^ s) >> 2) / c) | r;
    if ((s & ~limit) != 0) break;
  }
  return std::nullopt;
}

bool are_twins(const Graph& g, int v, int w) {
  const VertexSet pair = VertexSet{v, w};
  return ((g.neighbors(v) ^ g.neighbors(w)) - pair).empty();
}

std::vector<VertexSet> twin_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      if (are_twins(g, v, w)) {
        const int a = find(v);
        const int b = find(w);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  std::map<int, VertexSet> by_root;
  for (int v = 0; v < n; ++v) by_root[find(v)].insert(v);
  std::vector<VertexSet> out;
  for (auto& [root, cls] : by_root) out.push_back(cls);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
  return out;
}

}  // namespace rankbrittle

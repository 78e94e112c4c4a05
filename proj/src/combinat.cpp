#include "rankbrittle/combinat.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "rankbrittle/errors.hpp"

namespace rankbrittle {

namespace {

IntSet intersect(const IntSet& a, const IntSet& b) {
  IntSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<Sunflower> sunflower_rec(const std::vector<IntSet>& family, int p) {
  if (family.empty()) return std::nullopt;

  std::vector<IntSet> disjoint;
  std::set<int> used;
  for (const auto& s : family) {
    if (std::none_of(s.begin(), s.end(), [&](int x) { return used.count(x) != 0; })) {
      disjoint.push_back(s);
      used.insert(s.begin(), s.end());
      if (static_cast<int>(disjoint.size()) == p) break;
    }
  }
  if (static_cast<int>(disjoint.size()) >= p) {
    Sunflower out{disjoint, {}};
    if (p == 1) out.core = disjoint.front();
    return out;
  }

  std::map<int, int> freq;
  for (const auto& s : family) {
    for (int x : s) ++freq[x];
  }
  if (freq.empty()) return std::nullopt;
  int best = freq.begin()->first;
  for (auto [x, c] : freq) {
    if (c > freq[best]) best = x;
  }
  std::vector<IntSet> sub;
  for (const auto& s : family) {
    if (std::binary_search(s.begin(), s.end(), best)) {
      IntSet t;
      std::copy_if(s.begin(), s.end(), std::back_inserter(t), [&](int x) { return x != best; });
      sub.push_back(std::move(t));
    }
  }
  auto r = sunflower_rec(sub, p);
  if (!r) return std::nullopt;
  auto add = [&](IntSet& s) { s.insert(std::lower_bound(s.begin(), s.end(), best), best); };
  for (auto& m : r->members) add(m);
  add(r->core);
  return r;
}

}  // namespace

bool is_sunflower(const Sunflower& s) {
  if (!std::is_sorted(s.core.begin(), s.core.end())) return false;
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    if (!std::is_sorted(s.members[i].begin(), s.members[i].end())) return false;
    if (!std::includes(s.members[i].begin(), s.members[i].end(), s.core.begin(), s.core.end())) return false;
    for (std::size_t j = i + 1; j < s.members.size(); ++j) {
      if (s.members[i] == s.members[j]) return false;
      if (intersect(s.members[i], s.members[j]) != s.core) return false;
    }
  }
  return true;
}

std::uint64_t sunflower_threshold(int k, int p) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t out = 1;
  auto mul = [&](std::uint64_t x) { out = (x != 0 && out > kMax / x) ? kMax : out * x; };
  for (int i = 2; i <= k; ++i) mul(static_cast<std::uint64_t>(i));
  for (int i = 0; i < k; ++i) mul(static_cast<std::uint64_t>(std::max(p - 1, 0)));
  return out;
}

std::optional<Sunflower> find_sunflower(const std::vector<IntSet>& family, int p) {
  if (p < 1) throw InputError("sunflower: petal count must be at least 1");
  std::vector<IntSet> sets;
  std::set<IntSet> seen;
  std::size_t k = 0;
  for (auto s : family) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("sunflower: set with repeated element");
    if (s.empty()) throw InputError("sunflower: sets must be nonempty");
    if (k == 0) k = s.size();
    if (s.size() != k) throw InputError("sunflower: sets have unequal sizes");
    if (seen.insert(s).second) sets.push_back(std::move(s));
  }
  return sunflower_rec(sets, p);
}

std::optional<std::vector<int>> monochromatic_subset(const EdgeColoring& coloring, int n) {
  const int m = static_cast<int>(coloring.size());
  for (const auto& row : coloring) {
    if (static_cast<int>(row.size()) != m) throw InputError("coloring must be a square matrix");
  }
  std::set<int> colors;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (coloring[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          coloring[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        throw InputError("coloring must be symmetric");
      }
      colors.insert(coloring[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  if (n < 0 || n > m) return std::nullopt;
  if (n <= 1) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) out.push_back(i);
    return out;
  }

  auto col = [&](int i, int j) { return coloring[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  std::vector<int> chosen;
  for (int c : colors) {
    std::function<bool(int)> extend = [&](int from) {
      if (static_cast<int>(chosen.size()) == n) return true;
      for (int v = from; v <= m - (n - static_cast<int>(chosen.size())); ++v) {
        if (std::all_of(chosen.begin(), chosen.end(), [&](int u) { return col(u, v) == c; })) {
          chosen.push_back(v);
          if (extend(v + 1)) return true;
          chosen.pop_back();
        }
      }
      return false;
    };
    if (extend(0)) return chosen;
  }
  return std::nullopt;
}

bool is_bipartite_pattern(const Graph& g, const BipartitePattern& p) {
  if (p.s.size() != p.t.size()) return false;
  VertexSet seen;
  for (int v : p.s) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int v : p.t) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < p.s.size(); ++i) {
    for (std::size_t j = 0; j < p.t.size(); ++j) {
      if (g.adjacent(p.s[i], p.t[j]) != product_cross_edge(p.kind, static_cast<int>(i), static_cast<int>(j))) return false;
    }
  }
  return true;
}

std::optional<BipartitePattern> bipartite_pattern(const Graph& g, VertexSet s, VertexSet t, int n,
                                                  std::uint64_t node_limit) {
  if (!(s & t).empty()) throw InputError("bipartite pattern: S and T must be disjoint");
  if (!(s | t).is_subset_of(g.vertices())) throw InputError("bipartite pattern: vertex out of range");
  if (n < 1 || s.size() < n || t.size() < n) return std::nullopt;

  std::uint64_t nodes = 0;
  for (ProductKind kind : {ProductKind::Match, ProductKind::Half, ProductKind::AntiMatch}) {
    BipartitePattern cur{{}, {}, kind};
    const bool symmetric = kind != ProductKind::Half;
    std::function<bool()> extend = [&]() {
      const int i = static_cast<int>(cur.s.size());
      if (i == n) return true;
      if (++nodes > node_limit) throw ResourceError("bipartite pattern search exceeded its node limit");
      for (int a : s) {
        if (symmetric && i > 0 && a <= cur.s.back()) continue;
        if (std::find(cur.s.begin(), cur.s.end(), a) != cur.s.end()) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) ok = g.adjacent(a, cur.t[static_cast<std::size_t>(j)]) == product_cross_edge(kind, i, j);
        if (!ok) continue;
        for (int b : t) {
          if (std::find(cur.t.begin(), cur.t.end(), b) != cur.t.end()) continue;
          bool fits = g.adjacent(a, b) == product_cross_edge(kind, i, i);
          for (int j = 0; j < i && fits; ++j) fits = g.adjacent(cur.s[static_cast<std::size_t>(j)], b) == product_cross_edge(kind, j, i);
          if (!fits) continue;
          cur.s.push_back(a);
          cur.t.push_back(b);
          if (extend()) return true;
          cur.s.pop_back();
          cur.t.pop_back();
        }
      }
      return false;
    };
    if (extend()) return cur;
  }
  return std::nullopt;
}

bool is_induced_path(const Graph& g, const std::vector<int>& path) {
  VertexSet seen;
  for (int v : path) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      if (g.adjacent(path[i], path[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

namespace {

// Extends `path` by neighbors of its last vertex that see no other path vertex.
// `stop` decides when a path is long enough; returns true to stop the search.
bool grow_induced(const Graph& g, std::vector<int>& path, VertexSet blocked, const std::function<bool()>& stop) {
  if (stop()) return true;
  const int last = path.back();
  for (int v : g.neighbors(last) - blocked) {
    path.push_back(v);
    // Everything adjacent to the old path (including its own vertices) is now off limits.
    if (grow_induced(g, path, blocked | g.neighbors(last) | VertexSet::singleton(last), stop)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PathOrDegree> path_or_high_degree(const Graph& g, int k, int l) {
  if (k <= 3) throw InputError("path_or_high_degree: degree target must exceed 3");
  if (l <= 0) throw InputError("path_or_high_degree: path target must be positive");
  if (g.order() == 0 || !g.is_connected()) throw InputError("path_or_high_degree: graph must be connected");
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= k) return HighDegreeVertex{v};
  }
  std::vector<int> path;
  for (int start = 0; start < g.order(); ++start) {
    path.assign(1, start);
    if (grow_induced(g, path, VertexSet::singleton(start), [&] { return static_cast<int>(path.size()) >= l; })) {
      return InducedPath{path};
    }
  }
  return std::nullopt;
}

std::vector<int> longest_induced_path(const Graph& g) {
  std::vector<int> best;
  std::vector<int> path;
  for (int start = 0; start < g.order(); ++start) {
    path.assign(1, start);
    grow_induced(g, path, VertexSet::singleton(start), [&] {
      if (path.size() > best.size()) best = path;
      return false;
    });
  }
  return best;
}

}  // namespace rankbrittle

#include "rankbrittle/families.hpp"

#include "rankbrittle/errors.hpp"

namespace rankbrittle {

namespace {

void require_positive(int v, std::string_view what) {
  if (v < 1) throw InputError(std::string(what) + " requires a positive parameter, got " + std::to_string(v));
}

}  // namespace

Graph path(int n) {
  require_positive(n, "path");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle requires at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  require_positive(n, "complete");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph edgeless(int n) {
  require_positive(n, "edgeless");
  return Graph(n);
}

Graph star(int leaves) {
  require_positive(leaves, "star");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph subdivided_star(int n) {
  require_positive(n, "subdivided_star");
  Graph g(2 * n + 1);
  for (int i = 1; i <= n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, n + i);
  }
  return g;
}

Graph copies(int k, const Graph& h) {
  require_positive(k, "copies");
  const int m = h.order();
  if (k * m > kMaxVertices) throw InputError("copies: result exceeds 64 vertices");
  Graph g(k * m);
  for (int c = 0; c < k; ++c) {
    for (auto [u, v] : h.edges()) g.add_edge(c * m + u, c * m + v);
  }
  return g;
}

Graph make_family(std::string_view name, std::span<const int> params) {
  if (params.size() != 1) {
    throw InputError("family '" + std::string(name) + "' takes exactly one parameter");
  }
  const int p = params[0];
  if (name == "path") return path(p);
  if (name == "cycle") return cycle(p);
  if (name == "complete") return complete(p);
  if (name == "edgeless") return edgeless(p);
  if (name == "star") return star(p);
  if (name == "subdivided_star" || name == "subdiv_star") return subdivided_star(p);
  throw InputError("unknown family '" + std::string(name) + "'");
}

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::Match: return "match";
    case ProductKind::AntiMatch: return "antimatch";
    case ProductKind::Half: return "half";
  }
  return "?";
}

ProductKind parse_product_kind(std::string_view text) {
  if (text == "match" || text == "mat") return ProductKind::Match;
  if (text == "antimatch" || text == "antimat") return ProductKind::AntiMatch;
  if (text == "half" || text == "tri") return ProductKind::Half;
  throw InputError("unknown product kind '" + std::string(text) + "'");
}

bool product_cross_edge(ProductKind kind, int i, int j) {
  switch (kind) {
    case ProductKind::Match: return i == j;
    case ProductKind::AntiMatch: return i != j;
    case ProductKind::Half: return i >= j;
  }
  return false;
}

Graph product(const Graph& g, const Graph& h, ProductKind kind) {
  if (g.order() != h.order()) {
    throw InputError("product needs equal orders, got " + std::to_string(g.order()) + " and " +
                     std::to_string(h.order()));
  }
  const int n = g.order();
  if (2 * n > kMaxVertices) throw InputError("product: result exceeds 64 vertices");
  Graph out = disjoint_union(g, h);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (product_cross_edge(kind, i, j)) out.add_edge(i, n + j);
    }
  }
  return out;
}

Graph blown_product(const Graph& g, const Graph& h, ProductKind kind, int t, LinkMatrix link) {
  if (t < 1) throw InputError("blown product needs t >= 1");
  const Graph unit = product(g, h, kind);
  const int n = g.order();
  const int m = unit.order();
  if (t * m > kMaxVertices) throw InputError("blown product: result exceeds 64 vertices");
  Graph out = copies(t, unit);
  auto top = [&](int copy) { return VertexSet::range(n).bits() << (copy * m); };
  auto bottom = [&](int copy) { return VertexSet::range(n).bits() << (copy * m + n); };
  auto join = [&](std::uint64_t xs, std::uint64_t ys) {
    for (int x : VertexSet(xs)) {
      for (int y : VertexSet(ys)) out.add_edge(x, y);
    }
  };
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (link.a) join(top(i), top(j));
      if (link.b) join(top(i), bottom(j));
      if (link.c) join(bottom(i), top(j));
      if (link.d) join(bottom(i), bottom(j));
    }
  }
  return out;
}

}  // namespace rankbrittle

#include "rankbrittle/colorful_cut.hpp"

#include <algorithm>

#include "rankbrittle/cut_rank.hpp"
#include "rankbrittle/errors.hpp"
#include "rankbrittle/families.hpp"
#include "rankbrittle/isomorphism.hpp"

namespace rankbrittle {

namespace {

std::vector<VertexSet> check_copies_of_t2n(const Graph& g) {
  auto comps = g.components();
  const int n = static_cast<int>(comps.size());
  if (n == 0) throw InputError("colorful cut: empty graph");
  const Graph t = subdivided_star(n);
  for (VertexSet c : comps) {
    if (!are_isomorphic(g.induced(c), t)) {
      throw InputError("colorful cut: graph is not " + std::to_string(n) + " copies of T_{2," + std::to_string(n) + "}");
    }
  }
  return comps;
}

const DecompositionNode* node_of(const Decomposition& d, const CutCertificate& c) {
  if (c.kind == CutCertificate::Kind::ColorfulUnion) return &d.root;
  if (c.child < 0 || c.child >= static_cast<int>(d.root.children.size())) return nullptr;
  return &d.root.children[static_cast<std::size_t>(c.child)];
}

}  // namespace

CutCertificate colorful_cut_witness(const Graph& g, const Decomposition& d) {
  const auto comps = check_copies_of_t2n(g);
  validate_decomposition(g, d);
  if (d.depth() > 2) throw InputError("colorful cut: decomposition has radius greater than 2");
  const int n = static_cast<int>(comps.size());

  std::vector<VertexSet> parts;
  std::vector<int> color(static_cast<std::size_t>(g.order()));
  for (const auto& child : d.root.children) {
    const VertexSet p = leaf_set(child);
    for (int v : p) color[static_cast<std::size_t>(v)] = static_cast<int>(parts.size());
    parts.push_back(p);
  }

  for (VertexSet comp : comps) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (!comp.is_subset_of(parts[j])) continue;
      CutCertificate c;
      c.kind = CutCertificate::Kind::ComponentInPart;
      c.child = static_cast<int>(j);
      for (int v : comp) {
        if (g.degree(v) == 1) c.set.insert(v);
      }
      c.rank = cut_rank(g, c.set);
      return c;
    }
  }

  // Every component meets two parts, so it has an edge whose ends differ in color.
  std::vector<Edge> colorful;
  for (VertexSet comp : comps) {
    for (int u : comp) {
      const auto it = std::find_if(g.neighbors(u).begin(), g.neighbors(u).end(),
                                   [&](int v) { return color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(v)]; });
      if (it != g.neighbors(u).end()) {
        colorful.emplace_back(u, *it);
        break;
      }
    }
  }

  std::vector<int> used;
  for (auto [u, v] : colorful) {
    used.push_back(color[static_cast<std::size_t>(u)]);
    used.push_back(color[static_cast<std::size_t>(v)]);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  const int need = (n + 1) / 2;
  const std::uint64_t limit = std::uint64_t{1} << used.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    auto in_x = [&](int vertex) {
      const int col = color[static_cast<std::size_t>(vertex)];
      const auto pos = std::lower_bound(used.begin(), used.end(), col) - used.begin();
      return ((mask >> pos) & 1U) != 0;
    };
    const auto hits = std::count_if(colorful.begin(), colorful.end(), [&](const Edge& e) { return in_x(e.first) != in_x(e.second); });
    if (hits < need) continue;
    CutCertificate c;
    for (std::size_t i = 0; i < used.size(); ++i) {
      if ((mask >> i) & 1U) {
        c.colors.push_back(used[i]);
        c.set |= parts[static_cast<std::size_t>(used[i])];
      }
    }
    c.rank = cut_rank(g, c.set);
    return c;
  }
  throw InputError("colorful cut: no color subset separates enough colorful edges");
}

bool verify_cut_certificate(const Graph& g, const Decomposition& d, const CutCertificate& c, int bound) {
  const DecompositionNode* node = node_of(d, c);
  if (node == nullptr || node->is_leaf()) return false;
  VertexSet covered;
  for (const auto& child : node->children) {
    const VertexSet s = leaf_set(child);
    if (s.is_subset_of(c.set)) {
      covered |= s;
    } else if (!(s & c.set).empty()) {
      return false;
    }
  }
  if (covered != c.set) return false;
  if (c.kind == CutCertificate::Kind::ColorfulUnion) {
    VertexSet from_colors;
    for (int col : c.colors) {
      if (col < 0 || col >= static_cast<int>(node->children.size())) return false;
      from_colors |= leaf_set(node->children[static_cast<std::size_t>(col)]);
    }
    if (from_colors != c.set) return false;
  }
  const int r = cut_rank(g, c.set);
  return r == c.rank && r >= bound;
}

Decomposition random_radius2_decomposition(int n, std::mt19937_64& rng) {
  if (n < 2) throw InputError("a decomposition needs at least two vertices");
  std::uniform_int_distribution<int> parts_dist(2, n);
  const int m = parts_dist(rng);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);

  // First m shuffled vertices seed the parts, the rest land anywhere.
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(m));
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (int i = 0; i < n; ++i) {
    const auto slot = static_cast<std::size_t>(i < m ? i : pick(rng));
    parts[slot].push_back(perm[static_cast<std::size_t>(i)]);
  }

  Decomposition d;
  std::bernoulli_distribution flat(0.25);
  for (auto& p : parts) {
    std::sort(p.begin(), p.end());
    if (p.size() == 1) {
      d.root.children.push_back(DecompositionNode::leaf(p.front()));
    } else if (flat(rng)) {
      for (int v : p) d.root.children.push_back(DecompositionNode::leaf(v));
    } else {
      DecompositionNode node;
      for (int v : p) node.children.push_back(DecompositionNode::leaf(v));
      d.root.children.push_back(std::move(node));
    }
  }
  return d;
}

}  // namespace rankbrittle

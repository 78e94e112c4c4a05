#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rankbrittle/errors.hpp"
#include "rankbrittle/families.hpp"
#include "rankbrittle/graph.hpp"
#include "rankbrittle/isomorphism.hpp"

using namespace rankbrittle;

namespace {

bool well_formed(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) return false;
    for (int v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
  }
  return g.neighbors(0).is_subset_of(g.vertices()) || g.order() == 0;
}

}  // namespace

TEST_CASE("graph_from_edges builds exactly the given edges") {
  const Graph p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
  CHECK(p3 == path(3));
  CHECK(graph_from_edges(1, {}).order() == 1);
  CHECK(graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}}) == path(4));
  CHECK_THROWS_AS(graph_from_edges(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(graph_from_edges(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(graph_from_edges(3, {{-1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(65), InputError);
}

TEST_CASE("complement") {
  CHECK(complement(complete(3)) == edgeless(3));
  // P_4 0-1-2-3 complements to the path 1-3-0-2.
  CHECK(complement(path(4)) == graph_from_edges(4, {{1, 3}, {3, 0}, {0, 2}}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(1 + i % 12, 0.4, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(well_formed(complement(g)));
  }
}

TEST_CASE("families use the canonical labelings") {
  const Graph p5 = path(5);
  CHECK(p5.order() == 5);
  CHECK(p5.edge_count() == 4);
  CHECK(p5.degree_sequence().front() == 2);

  const Graph t = subdivided_star(3);
  CHECK(t.order() == 7);
  CHECK(t.edge_count() == 6);
  CHECK(t.degree_sequence() == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
  for (int i = 1; i <= 3; ++i) {
    CHECK(t.adjacent(0, i));
    CHECK(t.adjacent(i, 3 + i));
  }

  const Graph k2s = copies(3, complete(2));
  CHECK(k2s.order() == 6);
  CHECK(k2s.edge_count() == 3);

  CHECK(star(4).degree(0) == 4);
  CHECK(are_isomorphic(subdivided_star(1), path(3)));

  const int three[] = {3};
  const int zero[] = {0};
  CHECK(make_family("subdiv_star", three) == subdivided_star(3));
  CHECK(make_family("path", three) == path(3));
  CHECK_THROWS_AS(make_family("wheel", three), InputError);
  CHECK_THROWS_AS(make_family("path", zero), InputError);
  CHECK_THROWS_AS(path(-1), InputError);
}

TEST_CASE("products") {
  CHECK(product(complete(1), complete(1), ProductKind::Match) == complete(2));
  CHECK(product(edgeless(2), edgeless(2), ProductKind::Half) == graph_from_edges(4, {{0, 2}, {1, 2}, {1, 3}}));

  const Graph km = product(complete(5), edgeless(5), ProductKind::Match);
  CHECK(km.order() == 10);
  for (int i = 0; i < 5; ++i) {
    CHECK(km.degree(i) == 5);
    CHECK(km.degree(5 + i) == 1);
  }

  std::mt19937_64 rng(3);
  for (auto kind : {ProductKind::Match, ProductKind::AntiMatch, ProductKind::Half}) {
    const Graph g = random_graph(5, 0.5, rng);
    const Graph h = random_graph(5, 0.5, rng);
    const Graph p = product(g, h, kind);
    CHECK(p.induced(VertexSet::range(5)) == g);
    CHECK(p.induced(VertexSet::range(10) - VertexSet::range(5)) == h);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) CHECK(p.adjacent(i, 5 + j) == product_cross_edge(kind, i, j));
  }
  CHECK_THROWS_AS(product(complete(2), complete(3), ProductKind::Match), InputError);
  CHECK(parse_product_kind("tri") == ProductKind::Half);
  CHECK_THROWS_AS(parse_product_kind("cross"), InputError);
}

TEST_CASE("blown products") {
  // (K_4 match S_4)^3 with A = (0 1; 0 1): per copy 6 + 4 edges, and for each of the
  // three ordered copy pairs 16 top-bottom and 16 bottom-bottom edges.
  const Graph fig = blown_product(complete(4), edgeless(4), ProductKind::Match, 3, LinkMatrix{false, true, false, true});
  CHECK(fig.order() == 24);
  CHECK(fig.edge_count() == 3 * 10 + 3 * 32);
  CHECK(fig.adjacent(0, 8 + 4));   // copy 1 top to copy 2 bottom
  CHECK(!fig.adjacent(4, 8));      // copy 1 bottom to copy 2 top
  CHECK(fig.adjacent(4, 8 + 4));   // bottom to bottom

  std::mt19937_64 rng(11);
  const Graph g = random_graph(3, 0.5, rng);
  const Graph h = random_graph(3, 0.5, rng);
  for (int a = 0; a < 16; ++a) {
    const LinkMatrix link{(a & 1) != 0, (a & 2) != 0, (a & 4) != 0, (a & 8) != 0};
    CHECK(blown_product(g, h, ProductKind::Half, 1, link) == product(g, h, ProductKind::Half));
    CHECK(blown_product(g, h, ProductKind::Match, 4, link).order() == 2 * 4 * 3);
  }
  CHECK(blown_product(g, h, ProductKind::AntiMatch, 3, LinkMatrix{}) == copies(3, product(g, h, ProductKind::AntiMatch)));
  CHECK_THROWS_AS(blown_product(g, h, ProductKind::Match, 0, LinkMatrix{}), InputError);
  CHECK_THROWS_AS(blown_product(g, complete(2), ProductKind::Match, 2, LinkMatrix{}), InputError);
}

TEST_CASE("edge list text format") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(i % 9, 0.5, rng);
    std::istringstream in(format_edge_list(g));
    CHECK(parse_edge_list(in) == g);
  }
  std::istringstream commented("# a path\n3\n0 1 # first\n\n1 2\n");
  CHECK(parse_edge_list(commented) == path(3));
  for (const char* bad : {"", "3\n0 3\n", "3\n0\n", "x\n", "2\n0 0\n", "70\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(parse_edge_list(in), InputError);
  }
}

TEST_CASE("labels follow vertices through deletion and permutation") {
  const Graph g = path(5).without(VertexSet{0, 2});
  CHECK(g.labels() == std::vector<int>{1, 3, 4});
  CHECK(g.index_of_label(3) == 1);
  CHECK(g.index_of_label(2) == -1);
  const Graph p = path(3).permuted({2, 0, 1});
  CHECK(p.labels() == std::vector<int>{2, 0, 1});
  CHECK(p.adjacent(0, 2));  // old 2 - old 1
  CHECK(!same_labels(p, path(3)));
}

TEST_CASE("adjacency stays symmetric with an empty diagonal") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(2 + i % 20, 0.3, rng);
    CHECK(well_formed(g));
    g.toggle_edge(0, 1);
    CHECK(well_formed(g));
    CHECK(well_formed(g.without(0)));
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) perm[static_cast<std::size_t>(v)] = g.order() - 1 - v;
    const Graph p = g.permuted(perm);
    CHECK(well_formed(p));
    CHECK(p.edge_count() == g.edge_count());
  }
}

TEST_CASE("components and connectivity") {
  const Graph g = disjoint_union(path(3), complete(2));
  CHECK(!g.is_connected());
  CHECK(g.components() == std::vector<VertexSet>{VertexSet{0, 1, 2}, VertexSet{3, 4}});
  CHECK(path(6).is_connected());
}

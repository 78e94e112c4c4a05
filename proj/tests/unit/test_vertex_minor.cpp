#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rankbrittle/cut_rank.hpp"
#include "rankbrittle/errors.hpp"
#include "rankbrittle/families.hpp"
#include "rankbrittle/isomorphism.hpp"
#include "rankbrittle/solvers.hpp"
#include "rankbrittle/vertex_minor.hpp"

using namespace rankbrittle;

TEST_CASE("local complementation") {
  CHECK(local_complement(star(3), 0) == graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(local_complement(path(3), 0) == path(3));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = random_graph(n, 0.5, rng);
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const Graph h = local_complement(g, v);
    CHECK(h == oracle::local_complement(g, v));
    CHECK(local_complement(h, v) == g);
    CHECK(h.neighbors(v) == g.neighbors(v));
    const VertexSet s(rng() & g.vertices().bits());
    CHECK(cut_rank(h, s) == cut_rank(g, s));
  }
}

TEST_CASE("pivoting is symmetric and needs an edge") {
  std::mt19937_64 rng(4);
  int tried = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(2 + i % 9, 0.5, rng);
    for (auto [u, v] : g.edges()) {
      CHECK(pivot(g, u, v) == pivot(g, v, u));
      CHECK(pivot(g, u, v) == local_complement(local_complement(local_complement(g, u), v), u));
      ++tried;
      break;
    }
  }
  CHECK(tried > 100);
  CHECK_THROWS_AS(pivot(edgeless(3), 0, 1), InputError);
}

TEST_CASE("witnesses replay by label") {
  const Graph g = path(5);
  VMWitness w{{VMStep::del(0), VMStep::lc(2), VMStep::del(2)}};
  CHECK(w.deletes());
  const Graph h = apply_witness(g, w);
  CHECK(h.labels() == std::vector<int>{1, 3, 4});
  CHECK(h.adjacent(0, 1));
  CHECK(h.adjacent(1, 2));
  CHECK(!VMWitness{{VMStep::lc(1)}}.deletes());
  CHECK_THROWS_AS(apply_witness(g, VMWitness{{VMStep::del(0), VMStep::lc(0)}}), WitnessError);
  CHECK_THROWS_AS(apply_witness(g, VMWitness{{VMStep::del(9)}}), WitnessError);
}

TEST_CASE("orbits match breadth-first brute force") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_graph(2 + i % 5, 0.5, rng);
    const LocalOrbit o = local_orbit(g, 100000);
    CHECK(o.complete);
    CHECK(o.graphs.size() == oracle::orbit(g).size());
    for (std::size_t j = 0; j < o.graphs.size(); ++j) CHECK(apply_witness(g, o.witnesses[j]) == o.graphs[j]);
  }
  const LocalOrbit truncated = local_orbit(cycle(7), 3);
  CHECK(!truncated.complete);
  CHECK(truncated.graphs.size() <= 3);
}

TEST_CASE("local equivalence") {
  // K_n and K_{1,n-1} are locally equivalent; P_4 and K_{1,3} are not.
  const auto ks = locally_equivalent(complete(5), star(4));
  REQUIRE(ks.has_value());
  CHECK(!ks->witness.deletes());
  CHECK(are_isomorphic(apply_witness(complete(5), ks->witness), star(4)));
  CHECK(!locally_equivalent(path(4), star(3)).has_value());
  std::mt19937_64 rng(6);
  for (int i = 0; i < 80; ++i) {
    const Graph g = random_graph(5, 0.5, rng);
    const Graph h = random_graph(5, 0.5, rng);
    bool expected = false;
    for (const auto& x : oracle::orbit(g)) expected = expected || oracle::isomorphic(x, h);
    const auto r = locally_equivalent(g, h);
    CHECK(r.has_value() == expected);
    if (r) {
      const Graph x = apply_witness(g, r->witness);
      for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) CHECK(x.adjacent(u, v) == h.adjacent(r->mapping[u], r->mapping[v]));
    }
  }
  const auto lab = locally_equivalent_labeled(path(3), complete(3));
  REQUIRE(lab.has_value());
  CHECK(apply_witness(path(3), *lab) == complete(3));
  SolverCaps tiny;
  tiny.orbit_cap = 2;
  CHECK_THROWS_AS(locally_equivalent(cycle(8), path(8), tiny), ResourceError);
}

TEST_CASE("vertex-minor containment agrees with brute force") {
  std::mt19937_64 rng(7);
  int yes = 0;
  int no = 0;
  for (int i = 0; i < 120; ++i) {
    const int n = 4 + i % 3;
    const Graph g = random_graph(n, 0.5, rng);
    const Graph h = random_graph(n - 1 - static_cast<int>(rng() % 2), 0.5, rng);
    const bool expected = oracle::has_vertex_minor(g, h);
    const auto r = has_vertex_minor_isomorphic(g, h);
    CHECK(r.has_value() == expected);
    if (r) {
      CHECK(are_isomorphic(apply_witness(g, *r), h));
      ++yes;
    } else {
      ++no;
    }
  }
  CHECK(yes > 10);
  CHECK(no > 10);
}

TEST_CASE("vertex-minor facts") {
  // S_4 half S_4 is locally equivalent to P_8.
  const auto p = has_vertex_minor_isomorphic(kk_product(false, false, ProductKind::Half, 4), path(8));
  REQUIRE(p.has_value());
  // Cycles contain long paths, paths contain no cycles of their order.
  CHECK(has_vertex_minor_isomorphic(cycle(6), path(5)).has_value());
  CHECK(!has_vertex_minor_isomorphic(path(6), cycle(6)).has_value());
  // Vertex-minors do not increase linear rank-width.
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(7, 0.5, rng);
    const Graph h = path(5);
    const auto r = has_vertex_minor_isomorphic(g, h);
    if (r) CHECK(lrw_exact(apply_witness(g, *r)).width <= lrw_exact(g).width);
  }
  SolverCaps caps;
  caps.vertex_minor_max_n = 5;
  CHECK_THROWS_AS(has_vertex_minor_isomorphic(path(6), path(3), caps), ResourceError);
}

TEST_CASE("triple-twin reduction") {
  const TwinReduction r = reduce_triple_twin_steps(star(5));
  CHECK(r.graph.order() == 3);
  CHECK(r.deleted == std::vector<int>{1, 2, 3});
  CHECK(reduce_triple_twin(path(5)) == path(5));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(3 + i % 8, 0.5, rng);
    const Graph h = reduce_triple_twin(g);
    for (auto c : twin_classes(h)) CHECK(c.size() <= 2);
    CHECK(lrw_exact(h).width == lrw_exact(g).width);
  }
}

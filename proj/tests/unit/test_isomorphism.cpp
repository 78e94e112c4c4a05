#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rankbrittle/errors.hpp"
#include "rankbrittle/families.hpp"
#include "rankbrittle/isomorphism.hpp"

using namespace rankbrittle;

namespace {

bool is_mapping(const Graph& g, const Graph& h, const std::vector<int>& m) {
  if (static_cast<int>(m.size()) != g.order()) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) != h.adjacent(m[u], m[v])) return false;
  return true;
}

}  // namespace

TEST_CASE("agrees with brute force on all graphs with five vertices") {
  const auto graphs = oracle::all_labeled_graphs(5);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
  for (int i = 0; i < 3000; ++i) {
    const Graph& g = graphs[pick(rng)];
    const Graph& h = graphs[pick(rng)];
    const IsoResult r = find_isomorphism(g, h);
    const bool expected = oracle::isomorphic(g, h);
    CHECK((r.outcome == IsoOutcome::Isomorphic) == expected);
    if (expected) CHECK(is_mapping(g, h, r.mapping));
  }
}

TEST_CASE("class count for six vertices") {
  // 156 isomorphism classes of graphs on six vertices.
  const auto reps = oracle::all_graphs_up_to_iso(6);
  CHECK(reps.size() == 156);
  int pairs = 0;
  for (std::size_t i = 0; i < reps.size(); i += 7)
    for (std::size_t j = 0; j < reps.size(); j += 5) {
      CHECK(are_isomorphic(reps[i], reps[j]) == (i == j));
      ++pairs;
    }
  CHECK(pairs > 0);
}

TEST_CASE("random relabelings of larger graphs are recognised") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    const int n = 8 + i % 30;
    const Graph g = random_graph(n, 0.3 + 0.01 * (i % 20), rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = g.permuted(perm);
    const IsoResult r = find_isomorphism(g, h);
    REQUIRE(r.outcome == IsoOutcome::Isomorphic);
    CHECK(is_mapping(g, h, r.mapping));
    Graph k = h;
    k.toggle_edge(0, 1);
    CHECK(find_isomorphism(g, k).outcome == IsoOutcome::NotIsomorphic);
  }
}

TEST_CASE("regular graphs that refinement cannot split") {
  // C_6 versus two triangles: same degree sequence.
  const Graph two_triangles = copies(2, complete(3));
  CHECK(invariants_match(cycle(6), two_triangles));
  CHECK(!are_isomorphic(cycle(6), two_triangles));
  // Two labelings of the 3-cube.
  const Graph cube = graph_from_edges(8, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7}, {7, 6}, {6, 4},
                                          {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  CHECK(are_isomorphic(cube, cube.permuted({7, 3, 5, 1, 6, 2, 4, 0})));
  CHECK(!are_isomorphic(cube, copies(2, cycle(4))));
}

TEST_CASE("node limit is reported, not guessed") {
  const Graph g = copies(8, complete(3));
  const Graph h = copies(6, complete(4));
  CHECK(find_isomorphism(g, h, 1).outcome != IsoOutcome::Isomorphic);
  const Graph a = copies(4, cycle(6));
  const Graph b = copies(8, complete(3));
  const IsoResult r = find_isomorphism(a, b, 1);
  CHECK(r.outcome != IsoOutcome::Isomorphic);
  CHECK(find_isomorphism(a, a.permuted([] {
    std::vector<int> p(24);
    std::iota(p.rbegin(), p.rend(), 0);
    return p;
  }())).outcome == IsoOutcome::Isomorphic);
}

TEST_CASE("induced subgraph search") {
  const auto s = find_induced_subgraph(cycle(6), path(5));
  REQUIRE(s.has_value());
  CHECK(are_isomorphic(cycle(6).induced(*s), path(5)));
  CHECK(!find_induced_subgraph(path(6), cycle(3)).has_value());
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_graph(7, 0.5, rng);
    const Graph h = random_graph(4, 0.5, rng);
    CHECK(find_induced_subgraph(g, h).has_value() == oracle::has_induced(g, h));
  }
}

TEST_CASE("twin classes") {
  CHECK(twin_classes(star(3)) == std::vector<VertexSet>{VertexSet{0}, VertexSet{1, 2, 3}});
  CHECK(twin_classes(complete(3)) == std::vector<VertexSet>{VertexSet{0, 1, 2}});
  CHECK(are_twins(path(3), 0, 2));
  CHECK(!are_twins(path(4), 0, 3));
  CHECK(are_twins(path(2), 0, 1));
}

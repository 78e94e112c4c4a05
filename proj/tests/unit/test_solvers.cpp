#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "rankbrittle/errors.hpp"
#include "rankbrittle/families.hpp"
#include "rankbrittle/solvers.hpp"

using namespace rankbrittle;

namespace {

void check_witness(const Graph& g, const DecompositionResult& r, int depth) {
  if (g.order() < 2) {
    CHECK(!r.witness.has_value());
    return;
  }
  REQUIRE(r.witness.has_value());
  REQUIRE_NOTHROW(validate_decomposition(g, *r.witness));
  CHECK(r.witness->depth() <= depth);
  CHECK(oracle::literal_decomposition_width(g, *r.witness) == r.value);
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> out;
  for (int n = 1; n <= 5; ++n)
    for (auto& g : oracle::all_graphs_up_to_iso(n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("brittleness agrees with brute force on every graph up to five vertices") {
  for (const Graph& g : small_graphs()) {
    for (int d = 1; d <= 3; ++d) {
      const DecompositionResult r = rbrit_exact(g, d);
      CHECK(r.value == oracle::rbrit(g, d));
      check_witness(g, r, d);
    }
  }
}

TEST_CASE("rank-depth agrees with brute force on every graph up to five vertices") {
  for (const Graph& g : small_graphs()) {
    const DecompositionResult r = rank_depth_exact(g);
    CHECK(r.value == oracle::rank_depth(g));
    if (g.order() >= 2) {
      REQUIRE(r.witness.has_value());
      CHECK(r.witness->depth() <= r.value);
      CHECK(oracle::literal_decomposition_width(g, *r.witness) <= r.value);
    }
  }
}

TEST_CASE("rank k-brittleness agrees with brute force on every graph up to five vertices") {
  for (const Graph& g : small_graphs()) {
    for (int k = 1; k <= g.order(); ++k) {
      const PartitionResult r = beta_rho_k(g, k);
      CHECK(r.value == oracle::beta(g, k));
      REQUIRE_NOTHROW(validate_partition(g, r.witness));
      for (auto p : r.witness.parts) CHECK(p.size() <= k);
      CHECK(rho_width(g, r.witness) == r.value);
    }
  }
}

TEST_CASE("linear rank-width agrees with brute force on every graph up to six vertices") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::all_graphs_up_to_iso(n)) {
      const LinearLayout l = lrw_exact(g);
      CHECK(l.width == oracle::lrw(g));
      CHECK(oracle::layout_width(g, l.order) == l.width);
    }
}

TEST_CASE("random graphs on six and seven vertices") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    const int n = 6 + i % 2;
    const Graph g = random_graph(n, 0.2 + 0.6 * static_cast<double>(i % 10) / 10.0, rng);
    for (int d = 1; d <= 2; ++d) {
      const DecompositionResult r = rbrit_exact(g, d);
      CHECK(r.value == oracle::rbrit(g, d));
      check_witness(g, r, d);
    }
    if (n == 6) {
      CHECK(rbrit_exact(g, 3).value == oracle::rbrit(g, 3));
      CHECK(rank_depth_exact(g).value == oracle::rank_depth(g));
    }
    const int k = 1 + i % 4;
    CHECK(beta_rho_k(g, k).value == oracle::beta(g, k));
  }
}

TEST_CASE("known values") {
  CHECK(rbrit_exact(path(4), 2).value == 1);
  CHECK(rbrit_exact(path(4), 1).value == 2);
  CHECK(rbrit_exact(complete(6), 1).value == 1);
  CHECK(rbrit_exact(edgeless(6), 1).value == 0);
  CHECK(rank_depth_exact(cycle(5)).value == 2);
  CHECK(rank_depth_exact(complete(1)).value == 0);
  CHECK(lrw_exact(path(10)).width == 1);
  CHECK(lrw_exact(complete(12)).width == 1);
  CHECK(lrw_exact(edgeless(5)).width == 0);
  // The half graph has a vertex-minor P_8 and linear rank-width 1.
  CHECK(lrw_exact(kk_product(false, false, ProductKind::Half, 4)).width == 1);
  CHECK(beta_rho_k(path(4), 2).value == 1);
  CHECK(beta_rho_k(path(4), 4).value == 0);
}

TEST_CASE("monotonicity and the depth-first layout bound") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + i % 7;
    const Graph g = random_graph(n, 0.5, rng);
    const int r1 = rbrit_exact(g, 1).value;
    const int r2 = rbrit_exact(g, 2).value;
    const DecompositionResult r3 = rbrit_exact(g, 3);
    CHECK(r1 >= r2);
    CHECK(r2 >= r3.value);
    int prev = n;
    for (int k = 1; k <= n; ++k) {
      const int b = beta_rho_k(g, k).value;
      CHECK(b <= prev);
      prev = b;
    }
    CHECK(beta_rho_k(g, n).value == 0);
    CHECK(beta_rho_k(g, 1).value == r1);
    const DecompositionResult rd = rank_depth_exact(g);
    const int lrw = lrw_exact(g).width;
    CHECK(lrw <= rd.value * rd.value);
    CHECK(dfs_layout(g, *rd.witness).width <= rd.value * rd.value);
    CHECK(rbrit_exact(complement(g), 2).value <= r2 + 1);
  }
}

TEST_CASE("results do not depend on the thread count") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 6; ++i) {
    const Graph g = random_graph(8, 0.5, rng);
    SolverOptions one;
    SolverOptions four;
    four.threads = 4;
    const auto a = rbrit_exact(g, 2, one);
    const auto b = rbrit_exact(g, 2, four);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    const auto c = beta_rho_k(g, 3, one);
    const auto d = beta_rho_k(g, 3, four);
    CHECK(c.value == d.value);
    CHECK(c.witness == d.witness);
    CHECK(rank_depth_exact(g, one).witness == rank_depth_exact(g, four).witness);
  }
}

TEST_CASE("caps raise a resource error instead of answering") {
  std::mt19937_64 rng(1);
  const Graph g = random_graph(12, 0.5, rng);
  CHECK_THROWS_AS(rbrit_exact(g, 2), ResourceError);
  CHECK_THROWS_AS(rbrit_exact(g, 3), ResourceError);
  CHECK_THROWS_AS(rank_depth_exact(g), ResourceError);
  CHECK_NOTHROW(rbrit_exact(g, 1));
  SolverOptions tight;
  tight.caps.apply_overrides("lrw=5,beta=4");
  CHECK_THROWS_AS(lrw_exact(path(6), tight), ResourceError);
  CHECK_THROWS_AS(beta_rho_k(path(6), 2, tight), ResourceError);
  CHECK_THROWS_AS(tight.caps.apply_overrides("nope=3"), InputError);
  CHECK_THROWS_AS(tight.caps.apply_overrides("lrw=x"), InputError);
  CHECK_THROWS_AS(rbrit_exact(path(3), 0), InputError);
  CHECK_THROWS_AS(beta_rho_k(path(3), 0), InputError);
}

TEST_CASE("environment overrides") {
  ::setenv("RANKBRITTLE_CAPS", "rbrit2=3", 1);
  const SolverCaps caps = SolverCaps::from_env();
  ::unsetenv("RANKBRITTLE_CAPS");
  CHECK(caps.rbrit2_max_n == 3);
  CHECK(caps.lrw_max_n == SolverCaps{}.lrw_max_n);
}

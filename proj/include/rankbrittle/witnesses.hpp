#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankbrittle/caps.hpp"
#include "rankbrittle/families.hpp"
#include "rankbrittle/serialize.hpp"
#include "rankbrittle/vertex_minor.hpp"

namespace rankbrittle {

// Block structures built from n cliques X_1..X_n of size n, pairwise anti-complete.
//   CaseI:  plus an independent set Q; X_i vertex j meets Q vertex k per `kind`
//           (Match: j == k, AntiMatch: j != k). X_i = [(i-1)n, in), Q = [n^2, n^2+n).
//   CaseII: plus sets Y_1..Y_n (cliques if `bottom_clique`), laid out exactly as
//           blown_product(K_n, Y, kind, n, 0): X_i then Y_i for each copy in turn.
enum class CaseShape { CaseI, CaseII };

struct CaseStructure {
  CaseShape shape = CaseShape::CaseI;
  ProductKind kind = ProductKind::Match;
  bool bottom_clique = false;
  int n = 0;
  std::vector<VertexSet> x;
  VertexSet q;
  std::vector<VertexSet> y;
};

struct CaseInstance {
  Graph graph;
  CaseStructure structure;
};

/// Throws InputError when n < 2 or kind is Half.
CaseInstance build_case_structure(int n, CaseShape shape, ProductKind kind, bool bottom_clique = false);

/// Throws InputError if g does not have the declared block structure.
void validate_case_structure(const Graph& g, const CaseStructure& cs);

/// Induced path v_1 x_1 y_1 v_2 ... v_n x_n on 3n - 1 vertices in a CaseI Match
/// structure, with v_1..v_n the vertices of Q in ascending order.
std::vector<int> lemma_first1_path(const Graph& g, const CaseStructure& cs);

/// Two-stage reduction of a CaseI AntiMatch structure. v is the least vertex of Q
/// and v_i the vertex of X_i missing v. G_1 complements at v_1..v_n (n even) or
/// v_1..v_{n-1} (n odd) and deletes v and X_n; G_2 then complements at every vertex
/// of X_i - {v_i}, i < n, in ascending order. Vertex lists below hold labels, which
/// are the vertex indices of g.
struct First2Result {
  VMWitness to_g1;
  VMWitness to_g2;  // extends to_g1
  Graph g1;
  Graph g2;
  int v = -1;
  std::vector<int> v_i;        // v_1..v_{n-1}
  std::vector<int> path;       // w_1 x_1 v_1 y_1 w_2 ... w_{n-1} x_{n-1} v_{n-1}, 4n - 5 labels
  VMWitness to_path;           // to_g2 plus deletion of everything off the path
};

First2Result lemma_first2_path(const Graph& g, const CaseStructure& cs);

/// The four T_{2,n} constructions on product graphs with v_i = index i-1 and
/// w_i = index side + i - 1:
///   1: K_{n+1} Match S_{n+1}      del w1, lc v1
///   2: K_{n+2} Match K_{n+2}      del v1, del w2, lc v2, lc w1, del w1
///   3: K_{n+2} AntiMatch S_{n+2}  del w1, del v2, lc v1, lc w2, del w2
///   4: K_{n+1} AntiMatch K_{n+1}  del w1, lc v1, lc v2, ..., lc v_{n+1}
struct T2nWitness {
  Graph source;
  VMWitness witness;
  Graph target;
};

T2nWitness t2n_witness(int which, int n);

/// Steps of construction `which` for a product whose v- and w-sides carry the given
/// labels (both of length n+1 for cases 1 and 4, n+2 for cases 2 and 3).
VMWitness t2n_steps(int which, const std::vector<int>& v_labels, const std::vector<int>& w_labels);

/// Which construction applies to K Match/AntiMatch (K or S); 1..4.
int t2n_case_for(ProductKind kind, bool bottom_clique);

/// Asymmetric link matrix (0 b; c d), b != c. `single` = (K_1 Match K_1)^n_A and
/// `anti` = (K_1 AntiMatch K_1)^{n+1}_A. Both contain the half graph `half`
/// (S_n or K_n on the d-side): `single` is isomorphic to it and `anti` contains it on
/// `embedding`. The witnesses reduce each graph to P_{2n-2}.
struct AsymHalfgraph {
  Graph single;
  Graph anti;
  Graph half;
  std::vector<int> single_mapping;  // isomorphism single -> half
  VertexSet embedding;
  VMWitness single_to_path;
  VMWitness anti_to_path;
};

AsymHalfgraph asym_halfgraph(bool b, bool c, bool d, int n, const SolverCaps& caps = {});

/// Blown-product reductions on H = K_{n+2} kind (K or S)_{n+2}.
///   d1:      H^{n+1} with A = (0 0; 0 1). Complementing at the first bottom vertex of
///            copy 1 and deleting copy 1 gives H'^n with A = 0, where H' has the
///            bottom side complemented.
///   offdiag: H^{n+2} with A = (0 1; 1 d). With x the first top vertex of copy 1 and
///            y its least bottom neighbor, deleting the rest of copy 1 and pivoting on
///            xy gives H'^{n+1} with A = (0 0; 0 d), where H' swaps Match and AntiMatch.
struct BlownReduction {
  Graph source;
  VMWitness witness;
  Graph expected;
  ProductKind result_kind = ProductKind::Match;
  bool result_bottom_clique = false;
  LinkMatrix result_link;
  int result_copies = 0;
};

BlownReduction blown_reduce_d1(ProductKind kind, bool bottom_clique, int n);
BlownReduction blown_reduce_offdiag(ProductKind kind, bool bottom_clique, bool d, int n);

/// Continues a reduction that ended in a blown product with A = (0 0; 0 d) down to
/// nT_{2,n}: applies the d1 step when d = 1, drops surplus copies, trims each copy to
/// the size its construction needs, and applies the T_{2,n} steps per copy.
VMWitness chain_to_copies_of_t2n(const BlownReduction& reduction, int n);

struct Check {
  std::string name;
  bool pass = false;
};

struct LemmaReport {
  std::string lemma;
  json params = json::object();
  json witness = nullptr;
  std::vector<Check> checks;

  void check(std::string name, bool pass) { checks.push_back({std::move(name), pass}); }
  bool passed() const;
  json to_json() const;
};

/// Checks behind L2.3-1..3. 1: S_n half S_n ~ P_{2n}; 2: K_n half S_n ~ P_{2n};
/// 3: K_n half K_n has a P_{2n-2} vertex-minor.
LemmaReport halfgraph_equiv_check(int which, int n, const SolverCaps& caps = {});

struct VerifyOptions {
  int n = 0;          // 0 picks the lemma's default
  int samples = 0;    // 0 picks the lemma's default
  std::uint64_t seed = 1;
  SolverOptions solver;
};

/// L2.3-1 L2.3-2 L2.3-3 L3.1 L4.1 L4.3 L4.4 L4.6-1 L4.6-2 L4.6-3 L4.6-4 L4.7 L4.8 L4.9 P6.1 S5-lower
const std::vector<std::string>& lemma_ids();

/// Runs one verification. Throws InputError on an unknown id or parameters outside
/// the lemma's range.
LemmaReport run_lemma(const std::string& id, const VerifyOptions& options);

/// All graphs on `order` vertices in which 0, 1, 2 are pairwise twins, one per
/// choice of (clique or independent triple, common neighborhood, graph on the rest).
/// Every graph with a twin class of size >= 3 is isomorphic to one of them.
std::vector<Graph> graphs_with_twin_triple(int order);

}  // namespace rankbrittle

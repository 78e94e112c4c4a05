#include "rankbrittle/witnesses.hpp"

#include <algorithm>
#include <random>

#include "rankbrittle/colorful_cut.hpp"
#include "rankbrittle/combinat.hpp"
#include "rankbrittle/cut_rank.hpp"
#include "rankbrittle/errors.hpp"
#include "rankbrittle/graph6.hpp"
#include "rankbrittle/isomorphism.hpp"
#include "rankbrittle/solvers.hpp"

namespace rankbrittle {

namespace {

VertexSet interval(int from, int to) { return VertexSet::range(to) - VertexSet::range(from); }

int index_of(const Graph& g, int label) {
  const int i = g.index_of_label(label);
  if (i < 0) throw WitnessError("vertex " + std::to_string(label) + " is no longer present");
  return i;
}

VertexSet indices_of(const Graph& g, const std::vector<int>& labels) {
  VertexSet s;
  for (int l : labels) s.insert(index_of(g, l));
  return s;
}

std::vector<int> labels_of(const Graph& g, VertexSet s) {
  std::vector<int> out;
  for (int v : s) out.push_back(g.label(v));
  return out;
}

void append_deletions(VMWitness& w, const std::vector<int>& labels) {
  for (int l : labels) w.steps.push_back(VMStep::del(l));
}

// Vertex of `pool` whose neighborhood inside `within` is exactly `want`.
int find_with_neighbors(const Graph& g, VertexSet pool, VertexSet within, VertexSet want) {
  for (int u : pool) {
    if ((g.neighbors(u) & within) == want) return u;
  }
  throw WitnessError("block structure has no vertex with the required neighborhood");
}

ProductKind swapped(ProductKind k) {
  return k == ProductKind::Match ? ProductKind::AntiMatch : ProductKind::Match;
}

Graph side(bool clique, int n) { return clique ? complete(n) : edgeless(n); }

std::string kind_name(ProductKind kind, bool bottom_clique) {
  return std::string("K") + (kind == ProductKind::Match ? "-match-" : "-antimatch-") + (bottom_clique ? "K" : "S");
}

}  // namespace

CaseInstance build_case_structure(int n, CaseShape shape, ProductKind kind, bool bottom_clique) {
  if (n < 2) throw InputError("case structure needs n >= 2");
  if (kind == ProductKind::Half) throw InputError("case structure blocks are Match or AntiMatch");
  CaseInstance out;
  auto& cs = out.structure;
  cs.shape = shape;
  cs.kind = kind;
  cs.bottom_clique = shape == CaseShape::CaseII && bottom_clique;
  cs.n = n;
  if (shape == CaseShape::CaseI) {
    Graph g(n * n + n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) g.add_edge(i * n + j, i * n + k);
        for (int k = 0; k < n; ++k) {
          if (product_cross_edge(kind, j, k)) g.add_edge(i * n + j, n * n + k);
        }
      }
      cs.x.push_back(interval(i * n, (i + 1) * n));
    }
    cs.q = interval(n * n, n * n + n);
    out.graph = std::move(g);
  } else {
    out.graph = blown_product(complete(n), side(bottom_clique, n), kind, n, LinkMatrix{});
    for (int i = 0; i < n; ++i) {
      cs.x.push_back(interval(2 * n * i, 2 * n * i + n));
      cs.y.push_back(interval(2 * n * i + n, 2 * n * (i + 1)));
    }
  }
  return out;
}

void validate_case_structure(const Graph& g, const CaseStructure& cs) {
  const int n = cs.n;
  auto fail = [](const std::string& why) { throw InputError("case structure: " + why); };
  if (n < 2 || static_cast<int>(cs.x.size()) != n) fail("expected n >= 2 cliques");
  std::vector<VertexSet> blocks = cs.x;
  if (cs.shape == CaseShape::CaseI) {
    blocks.push_back(cs.q);
  } else {
    if (static_cast<int>(cs.y.size()) != n) fail("expected n bottom blocks");
    blocks.insert(blocks.end(), cs.y.begin(), cs.y.end());
  }
  VertexSet all;
  for (VertexSet b : blocks) {
    if (b.size() != n) fail("every block needs n vertices");
    if (!(all & b).empty()) fail("blocks overlap");
    all |= b;
  }
  if (all != g.vertices()) fail("blocks do not cover the graph");
  for (int i = 0; i < n; ++i) {
    const VertexSet xi = cs.x[static_cast<std::size_t>(i)];
    for (int u : xi) {
      if (!(xi - VertexSet::singleton(u)).is_subset_of(g.neighbors(u))) fail("X blocks must be cliques");
      for (int j = 0; j < n; ++j) {
        if (j != i && !(g.neighbors(u) & cs.x[static_cast<std::size_t>(j)]).empty()) fail("X blocks must be anti-complete");
      }
    }
    const VertexSet other = cs.shape == CaseShape::CaseI ? cs.q : cs.y[static_cast<std::size_t>(i)];
    const Graph want = kk_product(true, cs.bottom_clique, cs.kind, n);
    if (!are_isomorphic(g.induced(xi | other), want)) fail("block pair does not induce " + kind_name(cs.kind, cs.bottom_clique));
  }
}

std::vector<int> lemma_first1_path(const Graph& g, const CaseStructure& cs) {
  if (cs.shape != CaseShape::CaseI || cs.kind != ProductKind::Match) throw InputError("needs a CaseI Match structure");
  validate_case_structure(g, cs);
  const auto q = cs.q.to_vector();
  const int n = cs.n;
  std::vector<int> path;
  for (int i = 0; i < n; ++i) {
    const VertexSet xi = cs.x[static_cast<std::size_t>(i)];
    const int vi = q[static_cast<std::size_t>(i)];
    path.push_back(vi);
    if (i + 1 < n) {
      path.push_back(find_with_neighbors(g, xi, cs.q, VertexSet::singleton(vi)));
      path.push_back(find_with_neighbors(g, xi, cs.q, VertexSet::singleton(q[static_cast<std::size_t>(i + 1)])));
    } else {
      const VertexSet nb = g.neighbors(vi) & xi;
      if (nb.size() != 1) throw WitnessError("last Q vertex must have one neighbor in X_n");
      path.push_back(nb.front());
    }
  }
  return path;
}

First2Result lemma_first2_path(const Graph& g, const CaseStructure& cs) {
  if (cs.shape != CaseShape::CaseI || cs.kind != ProductKind::AntiMatch) throw InputError("needs a CaseI AntiMatch structure");
  validate_case_structure(g, cs);
  const int n = cs.n;
  First2Result r;
  r.v = cs.q.front();
  std::vector<int> all_vi;
  for (int i = 0; i < n; ++i) {
    const VertexSet miss = cs.x[static_cast<std::size_t>(i)] - g.neighbors(r.v);
    if (miss.size() != 1) throw WitnessError("each X_i needs exactly one vertex missing v");
    all_vi.push_back(miss.front());
  }
  r.v_i.assign(all_vi.begin(), all_vi.end() - 1);

  const int lc_count = n % 2 == 0 ? n : n - 1;
  for (int i = 0; i < lc_count; ++i) r.to_g1.steps.push_back(VMStep::lc(g.label(all_vi[static_cast<std::size_t>(i)])));
  r.to_g1.steps.push_back(VMStep::del(g.label(r.v)));
  append_deletions(r.to_g1, labels_of(g, cs.x.back()));
  r.g1 = apply_witness(g, r.to_g1);

  r.to_g2 = r.to_g1;
  for (int i = 0; i + 1 < n; ++i) {
    for (int u : cs.x[static_cast<std::size_t>(i)] - VertexSet::singleton(all_vi[static_cast<std::size_t>(i)])) {
      r.to_g2.steps.push_back(VMStep::lc(g.label(u)));
    }
  }
  r.g2 = apply_witness(g, r.to_g2);

  // Walk G_2 using labels (the indices of g).
  const auto w = labels_of(g, cs.q - VertexSet::singleton(r.v));
  const VertexSet q2 = indices_of(r.g2, w);
  for (int i = 0; i + 1 < n; ++i) {
    const int vi = r.v_i[static_cast<std::size_t>(i)];
    std::vector<int> rest;
    for (int u : cs.x[static_cast<std::size_t>(i)] - VertexSet::singleton(vi)) rest.push_back(g.label(u));
    const VertexSet pool = indices_of(r.g2, rest);
    const int wi = index_of(r.g2, w[static_cast<std::size_t>(i)]);
    const int xi = find_with_neighbors(r.g2, pool, q2, VertexSet::singleton(wi));
    r.path.push_back(w[static_cast<std::size_t>(i)]);
    r.path.push_back(r.g2.label(xi));
    r.path.push_back(vi);
    if (i + 2 < n) {
      const int wn = index_of(r.g2, w[static_cast<std::size_t>(i + 1)]);
      r.path.push_back(r.g2.label(find_with_neighbors(r.g2, pool, q2, VertexSet::singleton(wn))));
    }
  }

  r.to_path = r.to_g2;
  std::vector<int> off;
  for (int l : r.g2.labels()) {
    if (std::find(r.path.begin(), r.path.end(), l) == r.path.end()) off.push_back(l);
  }
  append_deletions(r.to_path, off);
  return r;
}

VMWitness t2n_steps(int which, const std::vector<int>& v, const std::vector<int>& w) {
  if (v.size() != w.size() || v.size() < 2) throw InputError("T_{2,n} construction needs two equal sides of size >= 2");
  VMWitness out;
  auto& s = out.steps;
  switch (which) {
    case 1:
      s = {VMStep::del(w[0]), VMStep::lc(v[0])};
      break;
    case 2:
      if (v.size() < 3) throw InputError("construction 2 needs sides of size >= 3");
      s = {VMStep::del(v[0]), VMStep::del(w[1]), VMStep::lc(v[1]), VMStep::lc(w[0]), VMStep::del(w[0])};
      break;
    case 3:
      if (v.size() < 3) throw InputError("construction 3 needs sides of size >= 3");
      s = {VMStep::del(w[0]), VMStep::del(v[1]), VMStep::lc(v[0]), VMStep::lc(w[1]), VMStep::del(w[1])};
      break;
    case 4:
      s = {VMStep::del(w[0])};
      for (int x : v) s.push_back(VMStep::lc(x));
      break;
    default:
      throw InputError("T_{2,n} construction must be 1, 2, 3 or 4");
  }
  return out;
}

int t2n_case_for(ProductKind kind, bool bottom_clique) {
  if (kind == ProductKind::Match) return bottom_clique ? 2 : 1;
  if (kind == ProductKind::AntiMatch) return bottom_clique ? 4 : 3;
  throw InputError("T_{2,n} constructions take Match or AntiMatch products");
}

namespace {

int t2n_side(int which, int n) { return which == 1 || which == 4 ? n + 1 : n + 2; }

}  // namespace

T2nWitness t2n_witness(int which, int n) {
  if (which < 1 || which > 4) throw InputError("T_{2,n} construction must be 1, 2, 3 or 4");
  if (n < 1) throw InputError("T_{2,n} construction needs n >= 1");
  const int m = t2n_side(which, n);
  const ProductKind kind = which <= 2 ? ProductKind::Match : ProductKind::AntiMatch;
  const bool bottom = which == 2 || which == 4;
  T2nWitness out;
  out.source = kk_product(true, bottom, kind, m);
  std::vector<int> v(static_cast<std::size_t>(m));
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    v[static_cast<std::size_t>(i)] = i;
    w[static_cast<std::size_t>(i)] = m + i;
  }
  out.witness = t2n_steps(which, v, w);
  out.target = subdivided_star(n);
  return out;
}

namespace {

// Replays `w` and hands back an equivalence to P_{2n} with the two path ends deleted.
VMWitness half_to_shorter_path(const Graph& g, VMWitness prefix, int n, const SolverCaps& caps) {
  const Graph start = apply_witness(g, prefix);
  auto eq = locally_equivalent(start, path(2 * n), caps);
  if (!eq) throw WitnessError("half graph is not locally equivalent to P_" + std::to_string(2 * n));
  prefix += eq->witness;
  const Graph at_path = apply_witness(start, eq->witness);
  for (int u = 0; u < at_path.order(); ++u) {
    const int pos = eq->mapping[static_cast<std::size_t>(u)];
    if (pos == 0 || pos == 2 * n - 1) prefix.steps.push_back(VMStep::del(at_path.label(u)));
  }
  return prefix;
}

}  // namespace

AsymHalfgraph asym_halfgraph(bool b, bool c, bool d, int n, const SolverCaps& caps) {
  if (b == c) throw InputError("asymmetric link matrix needs b != c");
  if (n < 2) throw InputError("asymmetric half graph needs n >= 2");
  const LinkMatrix link{false, b, c, d};
  AsymHalfgraph out;
  out.single = blown_product(complete(1), complete(1), ProductKind::Match, n, link);
  out.anti = blown_product(complete(1), complete(1), ProductKind::AntiMatch, n + 1, link);
  // Top vertices are pairwise non-adjacent; the bottom vertices form a clique iff d.
  out.half = kk_product(d, false, ProductKind::Half, n);

  auto iso = find_isomorphism(out.single, out.half, caps.iso_node_limit);
  if (iso.outcome == IsoOutcome::LimitExceeded) throw ResourceError("isomorphism search exceeded its node limit");
  if (iso.outcome == IsoOutcome::Isomorphic) out.single_mapping = iso.mapping;

  const auto emb = find_induced_subgraph(out.anti, out.half);
  if (emb) out.embedding = *emb;

  out.single_to_path = half_to_shorter_path(out.single, {}, n, caps);
  if (emb) {
    VMWitness trim;
    append_deletions(trim, labels_of(out.anti, out.anti.vertices() - *emb));
    out.anti_to_path = half_to_shorter_path(out.anti, trim, n, caps);
  }
  return out;
}

BlownReduction blown_reduce_d1(ProductKind kind, bool bottom_clique, int n) {
  if (n < 1) throw InputError("blown reduction needs n >= 1");
  if (kind == ProductKind::Half) throw InputError("blown reduction takes Match or AntiMatch");
  const int m = n + 2;
  BlownReduction r;
  r.source = blown_product(complete(m), side(bottom_clique, m), kind, n + 1, LinkMatrix{false, false, false, true});
  r.witness.steps.push_back(VMStep::lc(m));
  append_deletions(r.witness, labels_of(r.source, interval(0, 2 * m)));
  r.result_kind = kind;
  r.result_bottom_clique = !bottom_clique;
  r.result_link = LinkMatrix{};
  r.result_copies = n;
  r.expected = blown_product(complete(m), side(!bottom_clique, m), kind, n, r.result_link);
  return r;
}

BlownReduction blown_reduce_offdiag(ProductKind kind, bool bottom_clique, bool d, int n) {
  if (n < 1) throw InputError("blown reduction needs n >= 1");
  if (kind == ProductKind::Half) throw InputError("blown reduction takes Match or AntiMatch");
  const int m = n + 2;
  BlownReduction r;
  r.source = blown_product(complete(m), side(bottom_clique, m), kind, n + 2, LinkMatrix{false, true, true, d});
  const int x = 0;
  const int y = (r.source.neighbors(x) & interval(m, 2 * m)).front();
  append_deletions(r.witness, labels_of(r.source, interval(0, 2 * m) - VertexSet{x, y}));
  r.witness.steps.insert(r.witness.steps.end(),
                         {VMStep::lc(x), VMStep::lc(y), VMStep::lc(x), VMStep::del(x), VMStep::del(y)});
  r.result_kind = swapped(kind);
  r.result_bottom_clique = bottom_clique;
  r.result_link = LinkMatrix{false, false, false, d};
  r.result_copies = n + 1;
  r.expected = blown_product(complete(m), side(bottom_clique, m), r.result_kind, n + 1, r.result_link);
  return r;
}

VMWitness chain_to_copies_of_t2n(const BlownReduction& reduction, int n) {
  const int m = n + 2;
  VMWitness total = reduction.witness;
  Graph cur = apply_witness(reduction.source, total);
  bool bottom = reduction.result_bottom_clique;
  int copies_left = reduction.result_copies;

  if (reduction.result_link.d) {
    VMWitness step;
    step.steps.push_back(VMStep::lc(cur.label(m)));
    append_deletions(step, labels_of(cur, interval(0, 2 * m)));
    cur = apply_witness(cur, step);
    total += step;
    bottom = !bottom;
    --copies_left;
  }
  if (copies_left < n) throw WitnessError("reduction left fewer than n copies");

  VMWitness tail;
  append_deletions(tail, labels_of(cur, interval(2 * m * n, 2 * m * copies_left)));
  const int which = t2n_case_for(reduction.result_kind, bottom);
  const int keep = t2n_side(which, n);
  for (int c = 0; c < n; ++c) {
    std::vector<int> v;
    std::vector<int> w;
    for (int i = 0; i < m; ++i) {
      v.push_back(cur.label(2 * m * c + i));
      w.push_back(cur.label(2 * m * c + m + i));
    }
    for (int i = keep; i < m; ++i) tail.steps.insert(tail.steps.end(), {VMStep::del(v[static_cast<std::size_t>(i)]), VMStep::del(w[static_cast<std::size_t>(i)])});
    v.resize(static_cast<std::size_t>(keep));
    w.resize(static_cast<std::size_t>(keep));
    tail += t2n_steps(which, v, w);
  }
  total += tail;
  return total;
}

bool LemmaReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

json LemmaReport::to_json() const {
  json out;
  out["lemma"] = lemma;
  out["parameters"] = params;
  out["witness"] = witness;
  json cs = json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}});
  out["checks"] = cs;
  out["pass"] = passed();
  return out;
}

LemmaReport halfgraph_equiv_check(int which, int n, const SolverCaps& caps) {
  if (which < 1 || which > 3) throw InputError("half-graph check case must be 1, 2 or 3");
  if (n < 1 || (which == 3 && n < 2)) throw InputError("half-graph check needs n >= 1 (n >= 2 for case 3)");
  LemmaReport rep;
  rep.lemma = "L2.3-" + std::to_string(which);
  rep.params = {{"n", n}};
  const Graph src = kk_product(which >= 2, which == 3, ProductKind::Half, n);
  if (which <= 2) {
    const Graph target = path(2 * n);
    const auto eq = locally_equivalent(src, target, caps);
    rep.check("locally_equivalent_to_P" + std::to_string(2 * n), eq.has_value());
    if (eq) {
      rep.witness = json_of(eq->witness);
      rep.check("witness_uses_only_local_complementation", !eq->witness.deletes());
      rep.check("witness_replays_to_path", are_isomorphic(apply_witness(src, eq->witness), target));
    }
  } else {
    const Graph target = path(2 * n - 2);
    const auto w = has_vertex_minor_isomorphic(src, target, caps);
    rep.check("has_vertex_minor_P" + std::to_string(2 * n - 2), w.has_value());
    if (w) {
      rep.witness = json_of(*w);
      rep.check("witness_replays_to_path", are_isomorphic(apply_witness(src, *w), target));
    }
  }
  return rep;
}

std::vector<Graph> graphs_with_twin_triple(int order) {
  if (order < 3 || order > 9) throw InputError("twin-triple enumeration supports 3..9 vertices");
  const int rest = order - 3;
  std::vector<Edge> pairs;
  for (int u = 3; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (int clique = 0; clique < 2; ++clique) {
    for (std::uint32_t nb = 0; nb < (1U << rest); ++nb) {
      for (std::uint64_t em = 0; em < (std::uint64_t{1} << pairs.size()); ++em) {
        Graph g(order);
        if (clique) {
          g.add_edge(0, 1);
          g.add_edge(0, 2);
          g.add_edge(1, 2);
        }
        for (int i = 0; i < rest; ++i) {
          if ((nb >> i) & 1U) {
            for (int t = 0; t < 3; ++t) g.add_edge(t, 3 + i);
          }
        }
        for (std::size_t e = 0; e < pairs.size(); ++e) {
          if ((em >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);
        }
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = {"L2.3-1", "L2.3-2", "L2.3-3", "L3.1",   "L4.1",   "L4.3",
                                               "L4.4",   "L4.6-1", "L4.6-2", "L4.6-3", "L4.6-4", "L4.7",
                                               "L4.8",   "L4.9",   "P6.1",   "S5-lower"};
  return ids;
}

namespace {

int pick(int given, int fallback) { return given > 0 ? given : fallback; }

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// Runs a construction step, turning a failed construction into a failed check.
template <class F>
bool attempt(LemmaReport& rep, const std::string& name, F&& f) {
  try {
    f();
    return true;
  } catch (const WitnessError&) {
    rep.check(name, false);
    return false;
  }
}

LemmaReport verify_twins(const VerifyOptions& o) {
  const int n = pick(o.n, 6);
  require(n >= 3 && n <= 8, "L3.1 takes 3 <= n <= 8");
  LemmaReport rep;
  rep.lemma = "L3.1";
  std::size_t count = 0;
  bool found_class = true;
  bool preserved = true;
  json counterexample = nullptr;
  for (int order = 3; order <= n; ++order) {
    for (const Graph& g : graphs_with_twin_triple(order)) {
      ++count;
      const auto classes = twin_classes(g);
      const auto it = std::find_if(classes.begin(), classes.end(), [](VertexSet c) { return c.size() >= 3; });
      if (it == classes.end()) {
        found_class = false;
        continue;
      }
      const int v = it->front();
      const int before = rbrit_exact(g, 2, o.solver).value;
      const int after = rbrit_exact(g.without(v), 2, o.solver).value;
      if (before != after && preserved) {
        preserved = false;
        counterexample = {{"graph6", to_graph6(g)}, {"deleted", v}, {"before", before}, {"after", after}};
      }
    }
  }
  rep.params = {{"n", n}, {"graphs", count}};
  rep.witness = counterexample;
  rep.check("twin_class_of_size_3_present", found_class);
  rep.check("rbrit2_unchanged_by_deleting_a_twin", preserved);
  return rep;
}

LemmaReport verify_brittleness_bound(const VerifyOptions& o) {
  const int n = pick(o.n, 7);
  const int samples = pick(o.samples, 100);
  require(n >= 2, "L4.1 takes n >= 2");
  LemmaReport rep;
  rep.lemma = "L4.1";
  rep.params = {{"n", n}, {"samples", samples}, {"seed", o.seed}};
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> order_dist(2, n);
  bool bound[3] = {true, true, true};
  bool reeval = true;
  for (int s = 0; s < samples; ++s) {
    const Graph g = random_graph(order_dist(rng), 0.5, rng);
    const auto r2 = rbrit_exact(g, 2, o.solver);
    reeval = reeval && decomposition_width(g, *r2.witness) == r2.value && r2.witness->depth() <= 2;
    for (int k = 1; k <= 3; ++k) {
      const auto beta = beta_rho_k(g, k, o.solver);
      reeval = reeval && rho_width(g, beta.witness) == beta.value;
      bound[k - 1] = bound[k - 1] && r2.value <= std::max({2, k, beta.value});
    }
  }
  for (int k = 1; k <= 3; ++k) rep.check("rbrit2_at_most_max_2_k_beta_k" + std::to_string(k), bound[k - 1]);
  rep.check("witnesses_reevaluate", reeval);
  return rep;
}

LemmaReport verify_first1(const VerifyOptions& o) {
  const int n = pick(o.n, 3);
  require(n >= 2, "L4.3 takes n >= 2");
  LemmaReport rep;
  rep.lemma = "L4.3";
  const auto inst = build_case_structure(n, CaseShape::CaseI, ProductKind::Match);
  rep.params = {{"n", n}};
  std::vector<int> p;
  if (!attempt(rep, "construction", [&] { p = lemma_first1_path(inst.graph, inst.structure); })) return rep;
  rep.witness = p;
  rep.check("induced_path", is_induced_path(inst.graph, p));
  rep.check("length_3n_minus_1", static_cast<int>(p.size()) == 3 * n - 1);
  if (n <= 4) {
    const auto longest = longest_induced_path(inst.graph);
    rep.params["longest_induced_path"] = longest.size();
    rep.check("not_longer_than_longest_induced_path", longest.size() >= p.size());
  }
  return rep;
}

LemmaReport verify_first2(const VerifyOptions& o) {
  const int n = pick(o.n, 3);
  require(n >= 2, "L4.4 takes n >= 2");
  LemmaReport rep;
  rep.lemma = "L4.4";
  rep.params = {{"n", n}};
  const auto inst = build_case_structure(n, CaseShape::CaseI, ProductKind::AntiMatch);
  const auto& cs = inst.structure;
  First2Result r;
  if (!attempt(rep, "construction", [&] { r = lemma_first2_path(inst.graph, cs); })) return rep;
  rep.witness = {{"to_g2", json_of(r.to_g2)}, {"path", r.path}};

  const Graph g1 = apply_witness(inst.graph, r.to_g1);
  const Graph g2 = apply_witness(inst.graph, r.to_g2);
  std::vector<int> q_rest;
  for (int u : cs.q) {
    if (u != r.v) q_rest.push_back(u);
  }
  bool degree_two = true;
  bool g1_nbhd = true;
  bool g2_nbhd = true;
  bool matching = true;
  for (int i = 0; i + 1 < n; ++i) {
    const int vi = r.v_i[static_cast<std::size_t>(i)];
    std::vector<int> rest;
    for (int u : cs.x[static_cast<std::size_t>(i)]) {
      if (u != vi) rest.push_back(u);
    }
    for (int u : rest) degree_two = degree_two && g1.degree(index_of(g1, u)) == 2;
    auto nb_labels = [](const Graph& h, int label) {
      std::vector<int> out;
      for (int u : h.neighbors(h.index_of_label(label))) out.push_back(h.label(u));
      std::sort(out.begin(), out.end());
      return out;
    };
    std::vector<int> want = rest;
    want.insert(want.end(), q_rest.begin(), q_rest.end());
    std::sort(want.begin(), want.end());
    g1_nbhd = g1_nbhd && nb_labels(g1, vi) == want;
    g2_nbhd = g2_nbhd && nb_labels(g2, vi) == rest;
    std::vector<int> block = rest;
    block.insert(block.end(), q_rest.begin(), q_rest.end());
    matching = matching && are_isomorphic(g2.induced(indices_of(g2, block)), kk_product(false, false, ProductKind::Match, n - 1));
  }
  rep.check("G1_X_i_minus_v_i_have_degree_2", degree_two);
  rep.check("G1_neighborhood_of_v_i", g1_nbhd);
  rep.check("G2_neighborhood_of_v_i", g2_nbhd);
  rep.check("G2_blocks_induce_matching", matching);
  std::vector<int> idx;
  for (int l : r.path) idx.push_back(g2.index_of_label(l));
  rep.check("induced_path_in_G2", std::find(idx.begin(), idx.end(), -1) == idx.end() && is_induced_path(g2, idx));
  rep.check("length_4n_minus_5", static_cast<int>(r.path.size()) == 4 * n - 5);
  rep.check("witness_replays_to_path", are_isomorphic(apply_witness(inst.graph, r.to_path), path(4 * n - 5)));
  return rep;
}

LemmaReport verify_t2n(int which, const VerifyOptions& o) {
  const int n = pick(o.n, 2);
  require(n >= 1, "L4.6 takes n >= 1");
  LemmaReport rep;
  rep.lemma = "L4.6-" + std::to_string(which);
  rep.params = {{"n", n}};
  const auto t = t2n_witness(which, n);
  rep.witness = json_of(t.witness);
  rep.check("isomorphic_to_T2n", are_isomorphic(apply_witness(t.source, t.witness), t.target));
  if (which == 4) {
    // After deleting w_1 and complementing at v_1: S_n Match S_n plus a universal vertex.
    VMWitness head;
    head.steps.assign(t.witness.steps.begin(), t.witness.steps.begin() + 2);
    Graph apex(2 * n + 1);
    const Graph base = kk_product(false, false, ProductKind::Match, n);
    for (auto [u, v] : base.edges()) apex.add_edge(u + 1, v + 1);
    for (int u = 1; u <= 2 * n; ++u) apex.add_edge(0, u);
    rep.check("intermediate_is_matching_plus_apex", are_isomorphic(apply_witness(t.source, head), apex));
  }
  return rep;
}

LemmaReport verify_asym(const VerifyOptions& o) {
  const int n = pick(o.n, 3);
  require(n >= 2, "L4.7 takes n >= 2");
  LemmaReport rep;
  rep.lemma = "L4.7";
  rep.params = {{"n", n}};
  rep.witness = json::object();
  for (int bits = 0; bits < 8; ++bits) {
    const bool b = bits & 4;
    const bool c = bits & 2;
    const bool d = bits & 1;
    if (b == c) continue;
    const std::string tag = std::string("b") + (b ? "1" : "0") + "c" + (c ? "1" : "0") + "d" + (d ? "1" : "0");
    AsymHalfgraph a;
    if (!attempt(rep, tag + "_construction", [&] { a = asym_halfgraph(b, c, d, n, o.solver.caps); })) continue;
    rep.witness[tag] = {{"match_to_path", json_of(a.single_to_path)}, {"antimatch_to_path", json_of(a.anti_to_path)}};
    rep.check(tag + "_match_blowup_isomorphic_to_half_graph", !a.single_mapping.empty() && a.single.permuted([&] {
      std::vector<int> inv(a.single_mapping.size());
      for (std::size_t i = 0; i < inv.size(); ++i) inv[static_cast<std::size_t>(a.single_mapping[i])] = static_cast<int>(i);
      return inv;
    }()) == a.half);
    rep.check(tag + "_antimatch_blowup_contains_half_graph",
              a.embedding.size() == 2 * n && are_isomorphic(a.anti.induced(a.embedding), a.half));
    const Graph target = path(2 * n - 2);
    rep.check(tag + "_match_witness_replays_to_path", are_isomorphic(apply_witness(a.single, a.single_to_path), target));
    rep.check(tag + "_antimatch_witness_replays_to_path",
              !a.anti_to_path.steps.empty() && are_isomorphic(apply_witness(a.anti, a.anti_to_path), target));
    rep.check(tag + "_both_contain_P" + std::to_string(n),
              find_induced_subgraph(apply_witness(a.single, a.single_to_path), path(n)).has_value() &&
                  find_induced_subgraph(apply_witness(a.anti, a.anti_to_path), path(n)).has_value());
    if (2 * n <= 6) {
      rep.check(tag + "_vertex_minor_search_agrees", has_vertex_minor_isomorphic(a.single, target, o.solver.caps).has_value());
    }
  }
  return rep;
}

const std::pair<ProductKind, bool> kHKinds[] = {{ProductKind::Match, true},
                                                {ProductKind::Match, false},
                                                {ProductKind::AntiMatch, true},
                                                {ProductKind::AntiMatch, false}};

void check_chain(LemmaReport& rep, const std::string& tag, const BlownReduction& r, int n) {
  VMWitness chain;
  if (!attempt(rep, tag + "_chain_construction", [&] { chain = chain_to_copies_of_t2n(r, n); })) return;
  rep.witness[tag + "_chain"] = json_of(chain);
  rep.check(tag + "_chain_reaches_copies_of_T2n",
            are_isomorphic(apply_witness(r.source, chain), copies(n, subdivided_star(n))));
}

LemmaReport verify_d1(const VerifyOptions& o) {
  const int n = pick(o.n, 2);
  require(n >= 1, "L4.8 takes n >= 1");
  LemmaReport rep;
  rep.lemma = "L4.8";
  rep.params = {{"n", n}};
  rep.witness = json::object();
  for (auto [kind, bottom] : kHKinds) {
    const std::string tag = kind_name(kind, bottom);
    const auto r = blown_reduce_d1(kind, bottom, n);
    rep.witness[tag] = json_of(r.witness);
    rep.check(tag + "_labeled_equality", apply_witness(r.source, r.witness) == r.expected);
    check_chain(rep, tag, r, n);
  }
  return rep;
}

LemmaReport verify_offdiag(const VerifyOptions& o) {
  const int n = pick(o.n, 2);
  require(n >= 1, "L4.9 takes n >= 1");
  LemmaReport rep;
  rep.lemma = "L4.9";
  rep.params = {{"n", n}};
  rep.witness = json::object();
  for (auto [kind, bottom] : kHKinds) {
    for (bool d : {false, true}) {
      const std::string tag = kind_name(kind, bottom) + (d ? "_d1" : "_d0");
      const auto r = blown_reduce_offdiag(kind, bottom, d, n);
      rep.witness[tag] = json_of(r.witness);
      rep.check(tag + "_labeled_equality", apply_witness(r.source, r.witness) == r.expected);
      check_chain(rep, tag, r, n);
    }
  }
  return rep;
}

LemmaReport verify_lrw_bound(const VerifyOptions& o) {
  const int n = pick(o.n, 6);
  const int samples = pick(o.samples, 100);
  require(n >= 1, "P6.1 takes n >= 1");
  LemmaReport rep;
  rep.lemma = "P6.1";
  rep.params = {{"n", n}, {"samples", samples}, {"seed", o.seed}};
  std::mt19937_64 rng(o.seed);
  bool bound = true;
  bool layout = true;
  bool reeval = true;
  for (int s = 0; s < samples; ++s) {
    const Graph g = random_graph(n, 0.5, rng);
    const auto lrw = lrw_exact(g, o.solver);
    const auto rd = rank_depth_exact(g, o.solver);
    reeval = reeval && layout_width(g, lrw.order) == lrw.width;
    bound = bound && lrw.width <= rd.value * rd.value;
    if (rd.witness) {
      const int k = rd.value;
      reeval = reeval && decomposition_width(g, *rd.witness) <= k && rd.witness->depth() <= k;
      const auto dfs = dfs_layout(g, *rd.witness);
      layout = layout && dfs.width <= k * k && layout_width(g, dfs.order) == dfs.width;
    }
  }
  rep.check("lrw_at_most_rd_squared", bound);
  rep.check("dfs_layout_width_at_most_k_squared", layout);
  rep.check("witnesses_reevaluate", reeval);
  return rep;
}

LemmaReport verify_lower_bound(const VerifyOptions& o) {
  const int n = pick(o.n, 2);
  const int samples = pick(o.samples, 50);
  require(n >= 1, "S5-lower takes n >= 1");
  LemmaReport rep;
  rep.lemma = "S5-lower";
  rep.params = {{"n", n}, {"samples", samples}, {"seed", o.seed}};
  const Graph g = copies(n, subdivided_star(n));
  const int bound = (n + 1) / 2;
  if (g.order() <= o.solver.caps.rbrit2_max_n) {
    const auto r = rbrit_exact(g, 2, o.solver);
    rep.params["rbrit2"] = r.value;
    rep.check("exact_rbrit2_at_least_half_n", r.value >= bound);
  } else {
    rep.params["rbrit2"] = "beyond solver cap";
  }

  std::vector<Decomposition> ds;
  // One decomposition with each component in its own part, one cutting every
  // component into center side and leaf side, then random ones.
  Partition by_component;
  for (VertexSet c : g.components()) by_component.parts.push_back(c);
  if (by_component.parts.size() >= 2) ds.push_back(two_level_decomposition(by_component));
  Partition split;
  VertexSet centers;
  for (int c = 0; c < n; ++c) centers |= interval(c * (2 * n + 1), c * (2 * n + 1) + n + 1);
  split.parts = {centers, g.vertices() - centers};
  ds.push_back(two_level_decomposition(split));
  std::mt19937_64 rng(o.seed);
  for (int s = 0; s < samples; ++s) ds.push_back(random_radius2_decomposition(g.order(), rng));

  bool valid = true;
  int component_cases = 0;
  json first = nullptr;
  for (const auto& d : ds) {
    const auto cert = colorful_cut_witness(g, d);
    if (first.is_null()) first = {{"decomposition", json_of(d)}, {"certificate", json_of(cert)}};
    if (cert.kind == CutCertificate::Kind::ComponentInPart) ++component_cases;
    valid = valid && verify_cut_certificate(g, d, cert, bound) &&
            (cert.kind != CutCertificate::Kind::ComponentInPart || cert.rank >= n) &&
            decomposition_width(g, d) >= bound;
  }
  rep.params["decompositions"] = ds.size();
  rep.params["component_in_part_cases"] = component_cases;
  rep.witness = first;
  rep.check("certificates_valid", valid);
  return rep;
}

}  // namespace

LemmaReport run_lemma(const std::string& id, const VerifyOptions& o) {
  if (id == "L2.3-1" || id == "L2.3-2" || id == "L2.3-3") {
    const int which = id.back() - '0';
    return halfgraph_equiv_check(which, pick(o.n, which == 3 ? 3 : 2), o.solver.caps);
  }
  if (id == "L3.1") return verify_twins(o);
  if (id == "L4.1") return verify_brittleness_bound(o);
  if (id == "L4.3") return verify_first1(o);
  if (id == "L4.4") return verify_first2(o);
  if (id.rfind("L4.6-", 0) == 0 && id.size() == 6 && id.back() >= '1' && id.back() <= '4') return verify_t2n(id.back() - '0', o);
  if (id == "L4.7") return verify_asym(o);
  if (id == "L4.8") return verify_d1(o);
  if (id == "L4.9") return verify_offdiag(o);
  if (id == "P6.1") return verify_lrw_bound(o);
  if (id == "S5-lower") return verify_lower_bound(o);
  throw InputError("unknown lemma id '" + id + "'");
}

}  // namespace rankbrittle

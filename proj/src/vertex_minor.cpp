#include "rankbrittle/vertex_minor.hpp"

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <unordered_set>

#include "rankbrittle/errors.hpp"
#include "rankbrittle/isomorphism.hpp"

namespace rankbrittle {

bool VMWitness::deletes() const {
  return std::any_of(steps.begin(), steps.end(), [](const VMStep& s) { return s.op == VMStep::Op::Delete; });
}

VMWitness& VMWitness::operator+=(const VMWitness& more) {
  steps.insert(steps.end(), more.steps.begin(), more.steps.end());
  return *this;
}

Graph local_complement(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw InputError("local complementation at missing vertex " + std::to_string(v));
  Graph out = g;
  const auto nv = g.neighbors(v).to_vector();
  for (std::size_t i = 0; i < nv.size(); ++i) {
    for (std::size_t j = i + 1; j < nv.size(); ++j) out.toggle_edge(nv[i], nv[j]);
  }
  return out;
}

Graph pivot(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw InputError("pivot needs an edge, got " + std::to_string(u) + " " + std::to_string(v));
  }
  return local_complement(local_complement(local_complement(g, u), v), u);
}

Graph apply_witness(const Graph& g, const VMWitness& w) {
  Graph cur = g;
  for (const auto& step : w.steps) {
    const int idx = cur.index_of_label(step.vertex);
    if (idx < 0) throw WitnessError("witness step names vertex " + std::to_string(step.vertex) + " which is not present");
    cur = step.op == VMStep::Op::LocalComplement ? local_complement(cur, idx) : cur.without(idx);
  }
  return cur;
}

namespace {

using Rows = std::vector<std::uint64_t>;

struct RowsHash {
  std::size_t operator()(const Rows& r) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : r) h = (h ^ std::hash<std::uint64_t>{}(x)) * 0x100000001b3ULL;
    return h;
  }
};

Rows rows_of(const Graph& g) {
  Rows r;
  r.reserve(static_cast<std::size_t>(g.order()));
  for (auto row : g.rows()) r.push_back(row.bits());
  return r;
}

Graph graph_of(std::span<const std::uint64_t> rows, const std::vector<int>& labels) {
  Graph g(static_cast<int>(rows.size()));
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (int v : VertexSet(rows[u])) {
      if (static_cast<int>(u) < v) g.add_edge(static_cast<int>(u), v);
    }
  }
  g.set_labels(labels);
  return g;
}

// Flat-storage BFS over the local-complementation orbit.
class OrbitSearch {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  OrbitSearch(const Graph& g, std::size_t cap)
      : n_(static_cast<std::size_t>(g.order())), cap_(std::max<std::size_t>(cap, 1)), labels_(g.labels()),
        seen_(16, Hash{this}, Equal{this}) {
    add(rows_of(g), npos, -1);
  }

  // Calls visit(i) on each graph when first discovered; stops early when it returns true.
  std::size_t run(const std::function<bool(std::size_t)>& visit) {
    if (visit(0)) return 0;
    Rows scratch(n_);
    for (std::size_t head = 0; head < parent_.size(); ++head) {
      for (std::size_t v = 0; v < n_; ++v) {
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(head * n_), n_, scratch.begin());
        const std::uint64_t nv = scratch[v];
        if (nv == 0) continue;
        for (std::uint64_t b = nv; b != 0; b &= b - 1) {
          const int u = std::countr_zero(b);
          scratch[static_cast<std::size_t>(u)] ^= nv & ~(std::uint64_t{1} << u);
        }
        if (contains(scratch)) continue;
        if (parent_.size() >= cap_) {
          complete_ = false;
          return npos;
        }
        const std::size_t idx = add(scratch, head, static_cast<int>(v));
        if (visit(idx)) return idx;
      }
    }
    return npos;
  }

  bool complete() const { return complete_; }
  std::size_t size() const { return parent_.size(); }
  std::span<const std::uint64_t> rows(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  Graph graph(std::size_t i) const { return graph_of(rows(i), labels_); }

  VMWitness witness(std::size_t i) const {
    VMWitness w;
    for (; parent_[i] != npos; i = parent_[i]) w.steps.push_back(VMStep::lc(labels_[static_cast<std::size_t>(via_[i])]));
    std::reverse(w.steps.begin(), w.steps.end());
    return w;
  }

private:
  struct Hash {
    const OrbitSearch* self;
    std::size_t operator()(std::size_t i) const noexcept {
      const auto r = self->key_rows(i);
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto x : r) h = (h ^ std::hash<std::uint64_t>{}(x)) * 0x100000001b3ULL;
      return h;
    }
  };
  struct Equal {
    const OrbitSearch* self;
    bool operator()(std::size_t a, std::size_t b) const noexcept {
      const auto x = self->key_rows(a);
      const auto y = self->key_rows(b);
      return std::equal(x.begin(), x.end(), y.begin(), y.end());
    }
  };

  // Index npos-1 is a probe slot pointing at `probe_`.
  std::span<const std::uint64_t> key_rows(std::size_t i) const {
    if (i == kProbe) return {probe_->data(), n_};
    return rows(i);
  }

  bool contains(const Rows& r) {
    probe_ = &r;
    return seen_.count(kProbe) != 0;
  }

  std::size_t add(const Rows& r, std::size_t parent, int via) {
    const std::size_t idx = parent_.size();
    data_.insert(data_.end(), r.begin(), r.end());
    parent_.push_back(parent);
    via_.push_back(via);
    seen_.insert(idx);
    return idx;
  }

  static constexpr std::size_t kProbe = npos - 1;

  std::size_t n_;
  std::size_t cap_;
  std::vector<int> labels_;
  Rows data_;
  std::vector<std::size_t> parent_;
  std::vector<int> via_;
  const Rows* probe_ = nullptr;
  bool complete_ = true;
  std::unordered_set<std::size_t, Hash, Equal> seen_;
};

std::string orbit_cap_message(std::size_t cap) {
  return "local-complementation orbit exceeded the cap of " + std::to_string(cap) +
         " graphs before the query was resolved (raise it with RANKBRITTLE_CAPS=orbit=N)";
}

// Orbit search for a graph isomorphic to h. When the orbit is exhausted without a
// match and `orbit_out` is given, every orbit member is appended to it.
std::optional<LocalEquivalence> equivalence_search(const Graph& g, const Graph& h, const SolverCaps& caps,
                                                   std::vector<Rows>* orbit_out) {
  if (g.order() != h.order()) throw InputError("local equivalence needs graphs of equal order");
  OrbitSearch search(g, caps.orbit_cap);
  std::vector<int> mapping;
  const auto found = search.run([&](std::size_t i) {
    const Graph cur = search.graph(i);
    if (!invariants_match(cur, h)) return false;
    auto iso = find_isomorphism(cur, h, caps.iso_node_limit);
    if (iso.outcome == IsoOutcome::LimitExceeded) throw ResourceError("isomorphism search exceeded its node limit");
    if (iso.outcome != IsoOutcome::Isomorphic) return false;
    mapping = std::move(iso.mapping);
    return true;
  });
  if (found != OrbitSearch::npos) return LocalEquivalence{search.witness(found), std::move(mapping)};
  if (!search.complete()) throw ResourceError(orbit_cap_message(caps.orbit_cap));
  if (orbit_out != nullptr) {
    for (std::size_t i = 0; i < search.size(); ++i) {
      const auto r = search.rows(i);
      orbit_out->emplace_back(r.begin(), r.end());
    }
  }
  return std::nullopt;
}

VertexSet drop_index(VertexSet s, int v) {
  const std::uint64_t low = s.bits() & ((std::uint64_t{1} << v) - 1);
  const std::uint64_t high = v >= 63 ? 0 : (s.bits() >> (v + 1)) << v;
  return VertexSet(low | high);
}

class MinorSearch {
public:
  MinorSearch(const Graph& target, const SolverCaps& caps) : target_(target), caps_(caps), k_(target.order()) {}

  bool search(const Graph& g, VertexSet kept) {
    if (g.order() == k_) return leaf(g);
    Rows state = rows_of(g);
    state.push_back(kept.bits());
    if (failed_states_.count(state) != 0) return false;

    int v = -1;
    for (int u : g.vertices() - kept) {
      if (v < 0 || g.degree(u) > g.degree(v)) v = u;
    }
    const int lv = g.label(v);
    const VertexSet rest = drop_index(kept, v);

    if (branch(g.without(v), rest, {VMStep::del(lv)})) return true;
    if (g.degree(v) > 0) {
      if (branch(local_complement(g, v).without(v), rest, {VMStep::lc(lv), VMStep::del(lv)})) return true;
      const int w = g.neighbors(v).front();
      const int lw = g.label(w);
      if (branch(pivot(g, v, w).without(v), rest,
                 {VMStep::lc(lv), VMStep::lc(lw), VMStep::lc(lv), VMStep::del(lv)})) {
        return true;
      }
    }
    if (kept.size() < k_ && search(g, kept | VertexSet::singleton(v))) return true;

    failed_states_.insert(std::move(state));
    return false;
  }

  VMWitness witness() const { return VMWitness{path_}; }

private:
  bool branch(const Graph& next, VertexSet kept, std::initializer_list<VMStep> steps) {
    const std::size_t mark = path_.size();
    path_.insert(path_.end(), steps);
    if (search(next, kept)) return true;
    path_.resize(mark);
    return false;
  }

  bool leaf(const Graph& g) {
    Rows key = rows_of(g);
    if (failed_leaves_.count(key) != 0) return false;
    std::vector<Rows> orbit;
    auto eq = equivalence_search(g, target_, caps_, &orbit);
    if (eq) {
      path_.insert(path_.end(), eq->witness.steps.begin(), eq->witness.steps.end());
      return true;
    }
    for (auto& r : orbit) failed_leaves_.insert(std::move(r));
    return false;
  }

  const Graph& target_;
  const SolverCaps& caps_;
  int k_;
  std::vector<VMStep> path_;
  std::unordered_set<Rows, RowsHash> failed_leaves_;
  std::unordered_set<Rows, RowsHash> failed_states_;
};

}  // namespace

LocalOrbit local_orbit(const Graph& g, std::size_t cap) {
  OrbitSearch search(g, cap);
  search.run([](std::size_t) { return false; });
  LocalOrbit out;
  out.complete = search.complete();
  for (std::size_t i = 0; i < search.size(); ++i) {
    out.graphs.push_back(search.graph(i));
    out.witnesses.push_back(search.witness(i));
  }
  return out;
}

std::optional<LocalEquivalence> locally_equivalent(const Graph& g, const Graph& h, const SolverCaps& caps) {
  return equivalence_search(g, h, caps, nullptr);
}

std::optional<VMWitness> locally_equivalent_labeled(const Graph& g, const Graph& h, const SolverCaps& caps) {
  if (g.order() != h.order()) throw InputError("local equivalence needs graphs of equal order");
  OrbitSearch search(g, caps.orbit_cap);
  const Rows want = rows_of(h);
  const auto found = search.run([&](std::size_t i) {
    const auto r = search.rows(i);
    return std::equal(r.begin(), r.end(), want.begin(), want.end());
  });
  if (found != OrbitSearch::npos) return search.witness(found);
  if (!search.complete()) throw ResourceError(orbit_cap_message(caps.orbit_cap));
  return std::nullopt;
}

std::optional<VMWitness> has_vertex_minor_isomorphic(const Graph& g, const Graph& h, const SolverCaps& caps) {
  if (g.order() > caps.vertex_minor_max_n) {
    throw ResourceError("vertex-minor search: " + std::to_string(g.order()) + " vertices exceeds the cap of " +
                        std::to_string(caps.vertex_minor_max_n) + " (raise it with RANKBRITTLE_CAPS=vm=N)");
  }
  if (h.order() > g.order()) return std::nullopt;
  MinorSearch search(h, caps);
  if (!search.search(g, VertexSet{})) return std::nullopt;
  return search.witness();
}

TwinReduction reduce_triple_twin_steps(const Graph& g) {
  TwinReduction out{g, {}};
  while (true) {
    const auto classes = twin_classes(out.graph);
    auto it = std::find_if(classes.begin(), classes.end(), [](VertexSet c) { return c.size() >= 3; });
    if (it == classes.end()) return out;
    const int v = it->front();
    out.deleted.push_back(out.graph.label(v));
    out.graph = out.graph.without(v);
  }
}

}  // namespace rankbrittle

#include "rankbrittle/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "rankbrittle/cut_rank.hpp"
#include "rankbrittle/errors.hpp"

namespace rankbrittle {

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max();

void check_cap(int n, int cap, const char* what) {
  if (n > cap || n > kMaxCutRankTableOrder) {
    throw ResourceError(std::string(what) + ": " + std::to_string(n) + " vertices exceeds the cap of " +
                        std::to_string(std::min(cap, kMaxCutRankTableOrder)) +
                        " (raise it with RANKBRITTLE_CAPS)");
  }
}

std::vector<VertexSet> singletons(VertexSet s) {
  std::vector<VertexSet> out;
  for (int v : s) out.push_back(VertexSet::singleton(v));
  return out;
}

// Enumerates set partitions of a vertex set in the documented order, keeping the
// first partition of minimum width. Blocks are admitted through `child_cost`,
// which returns the cost contributed by the subtree below a block (kInfinity to
// reject the block). Width is the max over unions of blocks of the cut-rank, and
// the objective is max(width, child costs).
class PartitionSearch {
public:
  using ChildCost = std::function<int(VertexSet)>;

  PartitionSearch(const CutRankTable& rho, VertexSet set, ChildCost child_cost, bool need_two_blocks)
      : rho_(rho), set_(set), child_cost_(std::move(child_cost)), need_two_(need_two_blocks) {}

  // Search below a fixed first block. `global_best` is shared across branches:
  // a branch abandons states strictly worse than it, so equal values are still
  // found and the earliest branch can win ties.
  int run_branch(VertexSet first, int initial_best, const std::atomic<int>* global_best,
                 std::vector<VertexSet>& best_blocks) {
    best_ = initial_best;
    global_ = global_best;
    found_ = false;
    blocks_.clear();
    unions_.assign(1, VertexSet{});
    place(first, set_ - first, 0);
    if (found_) best_blocks = best_blocks_;
    return found_ ? best_ : kInfinity;
  }

  // First-block candidates in enumeration order.
  std::vector<VertexSet> first_blocks() const {
    std::vector<VertexSet> out;
    const int m = set_.front();
    const std::uint64_t others = (set_ - VertexSet::singleton(m)).bits();
    std::uint64_t sub = 0;
    do {
      const VertexSet b = VertexSet(sub) | VertexSet::singleton(m);
      if (!(need_two_ && b == set_)) out.push_back(b);
      sub = (sub - others) & others;
    } while (sub != 0);
    return out;
  }

private:
  bool pruned(int value) const {
    if (value >= best_) return true;
    return global_ != nullptr && value > global_->load(std::memory_order_relaxed);
  }

  void place(VertexSet block, VertexSet rem, int cur) {
    const int child = child_cost_(block);
    if (child == kInfinity) return;
    cur = std::max(cur, child);
    if (pruned(cur)) return;

    const std::size_t k = unions_.size();
    for (std::size_t i = 0; i < k && !pruned(cur); ++i) {
      const VertexSet u = unions_[i] | block;
      cur = std::max(cur, rho_(u));
      unions_.push_back(u);
    }
    if (!pruned(cur) && !rem.empty()) {
      // Any union together with everything still unassigned is a union of blocks.
      for (std::size_t i = 0; i < unions_.size() && !pruned(cur); ++i) cur = std::max(cur, rho_(unions_[i] | rem));
    }
    if (!pruned(cur)) {
      blocks_.push_back(block);
      if (rem.empty()) {
        best_ = cur;
        best_blocks_ = blocks_;
        found_ = true;
      } else {
        const int m = rem.front();
        const std::uint64_t others = (rem - VertexSet::singleton(m)).bits();
        std::uint64_t sub = 0;
        do {
          place(VertexSet(sub) | VertexSet::singleton(m), rem - VertexSet(sub) - VertexSet::singleton(m), cur);
          if (pruned(floor_)) break;
          sub = (sub - others) & others;
        } while (sub != 0);
      }
      blocks_.pop_back();
    }
    unions_.resize(k);
  }

public:
  // Known lower bound on the objective; search stops once it is reached.
  int floor_ = 0;

private:
  const CutRankTable& rho_;
  VertexSet set_;
  ChildCost child_cost_;
  bool need_two_;
  int best_ = kInfinity;
  const std::atomic<int>* global_ = nullptr;
  bool found_ = false;
  std::vector<VertexSet> blocks_;
  std::vector<VertexSet> best_blocks_;
  std::vector<VertexSet> unions_;
};

struct SearchOutcome {
  int value = kInfinity;
  std::vector<VertexSet> blocks;
};

// Runs a root-level partition search, splitting first-block branches across
// worker threads. The result is the first optimum in enumeration order.
SearchOutcome parallel_root_search(const CutRankTable& rho, VertexSet set,
                                   const std::function<PartitionSearch::ChildCost()>& make_child_cost,
                                   bool need_two, int initial_best, std::vector<VertexSet> initial_blocks,
                                   int floor, int threads) {
  PartitionSearch probe(rho, set, make_child_cost(), need_two);
  const auto firsts = probe.first_blocks();
  std::vector<SearchOutcome> results(firsts.size());
  std::atomic<int> global{initial_best};
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    PartitionSearch search(rho, set, make_child_cost(), need_two);
    search.floor_ = floor;
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= firsts.size()) break;
      if (global.load() <= floor) continue;
      auto& r = results[i];
      r.value = search.run_branch(firsts[i], initial_best, &global, r.blocks);
      int g = global.load();
      while (r.value < g && !global.compare_exchange_weak(g, r.value)) {
      }
    }
  };

  const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(firsts.size())));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }

  SearchOutcome best{initial_best, std::move(initial_blocks)};
  for (auto& r : results) {
    if (r.value < best.value) best = std::move(r);
  }
  return best;
}

// cost(S, h): least objective of a hierarchy of depth <= h over leaf set S,
// where S's own node width counts every union of its children. Memoized per
// (S, h), with h clamped to |S| - 1 (deeper trees need degree-2 nodes).
class HierarchySolver {
public:
  explicit HierarchySolver(const CutRankTable& rho) : rho_(rho) {}

  int cost(VertexSet s, int h) {
    const int size = s.size();
    if (size <= 1) return 0;
    h = std::min(h, size - 1);
    if (h == 1) return rho_.max_subset(s);
    auto& entry = lookup(s, h);
    if (entry.value >= 0) return entry.value;

    const int star = rho_.max_subset(s);
    const int floor = rho_(s);
    SearchOutcome out{star, singletons(s)};
    if (star > floor) {
      PartitionSearch search(rho_, s, [this, h](VertexSet b) { return cost(b, h - 1); }, true);
      search.floor_ = floor;
      for (VertexSet first : search.first_blocks()) {
        std::vector<VertexSet> blocks;
        const int v = search.run_branch(first, out.value, nullptr, blocks);
        if (v < out.value) out = {v, std::move(blocks)};
        if (out.value <= floor) break;
      }
    }
    auto& e = lookup(s, h);
    e.value = out.value;
    e.blocks = std::move(out.blocks);
    return e.value;
  }

  /// Root-level solve, optionally in parallel.
  SearchOutcome solve_root(VertexSet all, int h, int threads) {
    const int size = all.size();
    h = std::min(h, size - 1);
    const int star = rho_.max_subset(all);
    if (h == 1) return {star, singletons(all)};
    const CutRankTable& rho = rho_;
    // Worker threads get private memo tables; the main thread keeps its own for witness building.
    std::vector<std::unique_ptr<HierarchySolver>> helpers;
    std::mutex helpers_mutex;
    auto make_child_cost = [&]() -> PartitionSearch::ChildCost {
      std::lock_guard lock(helpers_mutex);
      helpers.push_back(std::make_unique<HierarchySolver>(rho));
      HierarchySolver* solver = helpers.back().get();
      return [solver, h](VertexSet b) { return solver->cost(b, h - 1); };
    };
    return parallel_root_search(rho_, all, make_child_cost, true, star, singletons(all), 0, threads);
  }

  DecompositionNode build(VertexSet s, int h, const std::vector<VertexSet>* top_blocks = nullptr) {
    if (s.size() == 1) return DecompositionNode::leaf(s.front());
    h = std::min(h, s.size() - 1);
    std::vector<VertexSet> blocks;
    if (top_blocks != nullptr) {
      blocks = *top_blocks;
    } else if (h == 1) {
      blocks = singletons(s);
    } else {
      cost(s, h);
      blocks = lookup(s, h).blocks;
    }
    DecompositionNode node;
    for (VertexSet b : blocks) node.children.push_back(build(b, h - 1));
    return node;
  }

private:
  struct Entry {
    int value = -1;
    std::vector<VertexSet> blocks;
  };

  Entry& lookup(VertexSet s, int h) {
    if (static_cast<int>(memo_.size()) <= h) memo_.resize(static_cast<std::size_t>(h) + 1);
    auto& level = memo_[static_cast<std::size_t>(h)];
    if (level.empty()) level.resize(std::size_t{1} << rho_.order());
    return level[static_cast<std::size_t>(s.bits())];
  }

  const CutRankTable& rho_;
  std::vector<std::vector<Entry>> memo_;
};

}  // namespace

DecompositionResult rbrit_exact(const Graph& g, int depth, const SolverOptions& options) {
  if (depth < 1) throw InputError("rbrit: depth must be at least 1");
  const int n = g.order();
  const int cap = depth == 1 ? options.caps.rbrit1_max_n
                  : depth == 2 ? options.caps.rbrit2_max_n
                               : options.caps.rbrit_max_n;
  check_cap(n, cap, depth <= 2 ? (depth == 1 ? "rbrit_1" : "rbrit_2") : "rbrit_d");
  if (n < 2) return {};
  const CutRankTable rho(g);
  HierarchySolver solver(rho);
  auto top = solver.solve_root(g.vertices(), depth, options.threads);
  DecompositionResult r;
  r.value = top.value;
  r.witness = Decomposition{solver.build(g.vertices(), depth, &top.blocks)};
  return r;
}

DecompositionResult rank_depth_exact(const Graph& g, const SolverOptions& options) {
  const int n = g.order();
  check_cap(n, options.caps.rank_depth_max_n, "rank_depth");
  if (n < 2) return {};
  const CutRankTable rho(g);
  HierarchySolver solver(rho);
  const VertexSet all = g.vertices();
  const int star = rho.max_subset(all);
  for (int k = 1;; ++k) {
    if (star <= k) return {k, star_decomposition(n)};
    auto top = solver.solve_root(all, k, options.threads);
    if (top.value <= k) return {k, Decomposition{solver.build(all, k, &top.blocks)}};
  }
}

PartitionResult beta_rho_k(const Graph& g, int k, const SolverOptions& options) {
  if (k < 1) throw InputError("beta_rho_k: part size bound must be at least 1");
  const int n = g.order();
  check_cap(n, options.caps.beta_max_n, "beta_rho_k");
  if (n == 0) return {};
  const CutRankTable rho(g);
  const VertexSet all = g.vertices();
  auto make_child_cost = [k]() -> PartitionSearch::ChildCost {
    return [k](VertexSet b) { return b.size() <= k ? 0 : kInfinity; };
  };
  const int star = rho.max_subset(all);
  auto out = parallel_root_search(rho, all, make_child_cost, false, star, singletons(all), 0, options.threads);
  return {out.value, Partition{std::move(out.blocks)}};
}

LinearLayout lrw_exact(const Graph& g, const SolverOptions& options) {
  const int n = g.order();
  check_cap(n, options.caps.lrw_max_n, "lrw");
  LinearLayout out;
  if (n <= 1) {
    if (n == 1) out.order = {0};
    return out;
  }
  const CutRankTable rho(g);
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> best(size, 0);
  std::vector<std::uint8_t> last(size, 0);
  for (std::size_t m = 1; m < size; ++m) {
    const int here = rho(VertexSet(m));
    int b = kInfinity;
    int choice = 0;
    for (std::uint64_t r = m; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      const int w = std::max<int>(best[m & ~(std::size_t{1} << v)], here);
      if (w < b) {
        b = w;
        choice = v;
      }
    }
    best[m] = static_cast<std::uint8_t>(b);
    last[m] = static_cast<std::uint8_t>(choice);
  }
  out.order.resize(static_cast<std::size_t>(n));
  std::size_t m = size - 1;
  for (int i = n - 1; i >= 0; --i) {
    const int v = last[m];
    out.order[static_cast<std::size_t>(i)] = v;
    m &= ~(std::size_t{1} << v);
  }
  out.width = best[size - 1];
  return out;
}

}  // namespace rankbrittle

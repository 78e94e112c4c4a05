#include "rankbrittle/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rankbrittle/errors.hpp"

namespace rankbrittle {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("graph order " + std::to_string(n) + " outside [0, 64]");
  }
  rows_.assign(static_cast<std::size_t>(n), VertexSet{});
  labels_.resize(static_cast<std::size_t>(n));
  std::iota(labels_.begin(), labels_.end(), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : rows_) twice += r.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d;
  d.reserve(rows_.size());
  for (auto r : rows_) d.push_back(r.size());
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

void Graph::add_edge(int u, int v) { set_edge(u, v, true); }
void Graph::remove_edge(int u, int v) { set_edge(u, v, false); }

void Graph::set_edge(int u, int v, bool on) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  auto& ru = rows_[static_cast<std::size_t>(u)];
  auto& rv = rows_[static_cast<std::size_t>(v)];
  if (on) {
    ru.insert(v);
    rv.insert(u);
  } else {
    ru.erase(v);
    rv.erase(u);
  }
}

void Graph::toggle_edge(int u, int v) { set_edge(u, v, !adjacent(u, v)); }

void Graph::set_labels(std::vector<int> labels) {
  if (labels.size() != rows_.size()) throw InputError("label count does not match graph order");
  labels_ = std::move(labels);
}

int Graph::index_of_label(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  const auto kept = keep.to_vector();
  return permuted(kept);
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  for (int v : perm) check_vertex(v);
  const int m = static_cast<int>(perm.size());
  Graph h(m);
  std::vector<int> labels(perm.size());
  for (int i = 0; i < m; ++i) {
    labels[static_cast<std::size_t>(i)] = label(perm[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < m; ++j) {
      if (adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) {
        h.add_edge(i, j);
      }
    }
  }
  h.labels_ = std::move(labels);
  return h;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet unseen = vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::singleton(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= neighbors(v);
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool Graph::is_connected() const { return order() <= 1 || components().size() == 1; }

bool same_labels(const Graph& a, const Graph& b) { return a == b && a.labels() == b.labels(); }

Graph graph_from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  h.set_labels(g.labels());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    long long x = 0;
    while (ls >> x) nums.push_back(x);
    if (!ls.eof()) throw InputError("edge list line " + std::to_string(line_no) + ": not an integer");
    if (nums.empty()) continue;
    if (n < 0) {
      if (nums.size() != 1) throw InputError("edge list line " + std::to_string(line_no) + ": expected vertex count");
      if (nums[0] < 0 || nums[0] > kMaxVertices) throw InputError("edge list vertex count out of range");
      n = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() != 2) throw InputError("edge list line " + std::to_string(line_no) + ": expected `u v`");
    if (nums[0] < 0 || nums[0] >= n || nums[1] < 0 || nums[1] >= n) {
      throw InputError("edge list line " + std::to_string(line_no) + ": endpoint out of range");
    }
    edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
  }
  if (n < 0) throw InputError("edge list is empty");
  return graph_from_edges(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace rankbrittle

#include "symisr/graph.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

namespace symisr {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

namespace {

template <typename Op>
VertexSet combine(const VertexSet& a, const VertexSet& b, Op op) {
  std::vector<Vertex> out;
  op(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

}  // namespace

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_union(args...); });
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_intersection(args...); });
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_difference(args...); });
}

VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_symmetric_difference(args...); });
}

std::string to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 1) throw InvalidInput("graph must have at least one vertex");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n) + 1, {});
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + " " +
                         std::to_string(v));
    }
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& row : g.adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    twice += row.size();
  }
  g.m_ = twice / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& row = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(row.begin(), row.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::vertices() const {
  std::vector<Vertex> vs(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) vs[i] = i + 1;
  return VertexSet(std::move(vs));
}

Graph Graph::induced(const VertexSet& s, std::vector<Vertex>* to_original) const {
  check_range(*this, s);
  std::vector<int> local(static_cast<std::size_t>(n_) + 1, 0);
  int next = 0;
  for (Vertex v : s) local[v] = ++next;
  std::vector<Edge> es;
  for (Vertex u : s) {
    for (Vertex v : adj_[u]) {
      if (u < v && local[v] != 0) es.emplace_back(local[u], local[v]);
    }
  }
  if (to_original) to_original->assign(s.begin(), s.end());
  return build(static_cast<int>(s.size()), es);
}

Graph Graph::complement() const {
  std::vector<Edge> es;
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v = u + 1; v <= n_; ++v) {
      if (!has_edge(u, v)) es.emplace_back(u, v);
    }
  }
  return build(n_, es);
}

void check_range(const Graph& g, const VertexSet& s) {
  if (!s.empty() && (s.front() < 1 || s.back() > g.order())) {
    throw InvalidInput("vertex set " + to_string(s) + " out of range 1.." +
                       std::to_string(g.order()));
  }
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s) {
  check_range(g, s);
  std::vector<char> in(static_cast<std::size_t>(g.order()) + 1, 0);
  for (Vertex v : s) in[v] = 1;
  std::vector<VertexSet> comps;
  std::vector<Vertex> stack;
  for (Vertex start : s) {
    if (in[start] != 1) continue;
    std::vector<Vertex> comp;
    in[start] = 2;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (in[w] == 1) {
          in[w] = 2;
          stack.push_back(w);
        }
      }
    }
    comps.emplace_back(std::move(comp));
  }
  return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

bool is_connected_set(const Graph& g, const VertexSet& s) {
  return !s.empty() && connected_components(g, s).size() == 1;
}

bool is_connected(const Graph& g) { return is_connected_set(g, g.vertices()); }

bool is_independent(const Graph& g, const VertexSet& s) {
  check_range(g, s);
  for (Vertex u : s) {
    for (Vertex w : g.neighbors(u)) {
      if (w > u && s.contains(w)) return false;
    }
  }
  return true;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 1; v <= g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int degeneracy(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n) + 1);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 1; v <= n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
  int best = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    best = std::max(best, d);
    removed[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return best;
}

}  // namespace symisr

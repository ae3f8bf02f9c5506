#include "symisr/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace symisr {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<Edge> tree_edges(int n, Rng& rng) {
  std::vector<Edge> edges;
  if (n == 2) edges.emplace_back(1, 2);
  if (n <= 2) return edges;
  std::vector<int> code(static_cast<std::size_t>(n) - 2);
  for (int& c : code) c = uniform(rng, 1, n);
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int c : code) ++degree[c];
  for (int c : code) {
    int leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::vector<int> last;
  for (int v = 1; v <= n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return edges;
}

void cograph_edges(std::vector<int> vs, Rng& rng, std::vector<Edge>& edges) {
  if (vs.size() <= 1) return;
  int parts = uniform(rng, 2, static_cast<int>(std::min<std::size_t>(vs.size(), 3)));
  std::shuffle(vs.begin(), vs.end(), rng);
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(parts));
  for (int i = 0; i < parts; ++i) groups[i].push_back(vs[i]);
  for (std::size_t i = parts; i < vs.size(); ++i) groups[uniform(rng, 0, parts - 1)].push_back(vs[i]);
  if (coin(rng, 0.5)) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        for (int u : groups[i]) {
          for (int w : groups[j]) edges.emplace_back(u, w);
        }
      }
    }
  }
  for (auto& g : groups) cograph_edges(std::move(g), rng, edges);
}

}  // namespace

std::optional<GraphClass> parse_graph_class(const std::string& name) {
  static const std::map<std::string, GraphClass> names{
      {"path", GraphClass::Path},   {"cycle", GraphClass::Cycle},     {"tree", GraphClass::Tree},
      {"forest", GraphClass::Forest}, {"block", GraphClass::Block},   {"cograph", GraphClass::Cograph},
      {"chain", GraphClass::Chain}, {"split", GraphClass::Split}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string class_name(GraphClass c) {
  switch (c) {
    case GraphClass::Path: return "path";
    case GraphClass::Cycle: return "cycle";
    case GraphClass::Tree: return "tree";
    case GraphClass::Forest: return "forest";
    case GraphClass::Block: return "block";
    case GraphClass::Cograph: return "cograph";
    case GraphClass::Chain: return "chain";
    case GraphClass::Split: return "split";
  }
  return "unknown";
}

int min_order(GraphClass c) { return c == GraphClass::Cycle ? 3 : 1; }

Graph random_graph(GraphClass c, int n, Rng& rng) {
  if (n < min_order(c)) throw InvalidInput(class_name(c) + " needs at least " + std::to_string(min_order(c)) + " vertices");
  std::vector<Edge> edges;
  switch (c) {
    case GraphClass::Path:
    case GraphClass::Cycle:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      if (c == GraphClass::Cycle) edges.emplace_back(1, n);
      break;
    case GraphClass::Tree:
      edges = tree_edges(n, rng);
      break;
    case GraphClass::Forest:
      for (auto e : tree_edges(n, rng)) {
        if (!coin(rng, 0.25)) edges.push_back(e);
      }
      break;
    case GraphClass::Block: {
      int count = 1;
      while (count < n) {
        int anchor = uniform(rng, 1, count);
        int size = uniform(rng, 2, std::min(4, n - count + 1));
        std::vector<int> clique{anchor};
        for (int i = 1; i < size; ++i) clique.push_back(++count);
        for (std::size_t i = 0; i < clique.size(); ++i) {
          for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
        }
      }
      break;
    }
    case GraphClass::Cograph: {
      std::vector<int> vs(static_cast<std::size_t>(n));
      std::iota(vs.begin(), vs.end(), 1);
      cograph_edges(vs, rng, edges);
      break;
    }
    case GraphClass::Chain: {
      if (n == 1) break;
      int na = uniform(rng, 1, n - 1), nb = n - na;
      // a_i = i, b_j = na + j; a_i sees the last deg_i vertices of B.
      std::vector<int> deg(static_cast<std::size_t>(na));
      for (int& d : deg) d = uniform(rng, 1, nb);
      std::sort(deg.begin(), deg.end());
      deg.back() = nb;
      for (int i = 1; i <= na; ++i) {
        for (int j = nb - deg[i - 1] + 1; j <= nb; ++j) edges.emplace_back(i, na + j);
      }
      break;
    }
    case GraphClass::Split: {
      int k = uniform(rng, 1, n);
      for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) edges.emplace_back(i, j);
      }
      for (int v = k + 1; v <= n; ++v) {
        for (int u = 1; u <= k; ++u) {
          if (coin(rng, 0.5)) edges.emplace_back(u, v);
        }
      }
      break;
    }
  }
  return Graph::build(n, edges);
}

Graph relabel(const Graph& g, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::build(g.order(), edges);
}

VertexSet random_independent_set(const Graph& g, Rng& rng) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> blocked(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<Vertex> chosen;
  for (Vertex v : order) {
    if (blocked[v] || !coin(rng, 0.5)) continue;
    chosen.push_back(v);
    blocked[v] = 1;
    for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  }
  return VertexSet(std::move(chosen));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace symisr

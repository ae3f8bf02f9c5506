#include "symisr/recognition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace symisr {

namespace {

// 0/1 side per vertex (index 0 unused), or nullopt if an odd cycle exists.
// The minimum vertex of every component gets side 0.
std::optional<std::vector<int>> two_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n) + 1, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 1; s <= n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool nested(const Graph& g, const std::vector<Vertex>& order) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    auto lo = g.neighbors(order[i]);
    auto hi = g.neighbors(order[i + 1]);
    if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) return false;
  }
  return true;
}

std::vector<VertexSet> co_components(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> rest(s.begin(), s.end());
  std::vector<VertexSet> out;
  while (!rest.empty()) {
    std::vector<Vertex> comp{rest.front()};
    rest.erase(rest.begin());
    for (std::size_t head = 0; head < comp.size(); ++head) {
      Vertex u = comp[head];
      std::vector<Vertex> keep;
      for (Vertex w : rest) {
        if (g.has_edge(u, w)) {
          keep.push_back(w);
        } else {
          comp.push_back(w);
        }
      }
      rest.swap(keep);
    }
    out.emplace_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const VertexSet& x, const VertexSet& y) { return x.front() < y.front(); });
  return out;
}

std::optional<std::array<Vertex, 4>> p4_within(const Graph& g, const VertexSet& s) {
  for (Vertex b : s) {
    for (Vertex c : g.neighbors(b)) {
      if (!s.contains(c)) continue;
      for (Vertex a : g.neighbors(b)) {
        if (a == c || !s.contains(a) || g.has_edge(a, c)) continue;
        for (Vertex d : g.neighbors(c)) {
          if (d == b || !s.contains(d) || g.has_edge(d, b) || g.has_edge(a, d)) continue;
          return std::array<Vertex, 4>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

int build_cotree(const Graph& g, const VertexSet& s, Cotree& t) {
  if (s.size() == 1) {
    t.nodes.push_back({CotreeKind::Leaf, s.front(), {}});
    return t.root();
  }
  auto parts = connected_components(g, s);
  CotreeKind kind = CotreeKind::Union;
  if (parts.size() == 1) {
    parts = co_components(g, s);
    kind = CotreeKind::Join;
    if (parts.size() == 1) {
      auto w = p4_within(g, s);
      if (!w) throw std::logic_error("prime cograph node without induced P4");
      throw P4Found(*w);
    }
  }
  std::vector<int> children;
  for (const auto& part : parts) children.push_back(build_cotree(g, part, t));
  t.nodes.push_back({kind, 0, std::move(children)});
  return t.root();
}

struct BlockBuilder {
  const Graph& g;
  BlockTree tree;

  int push(BlockNode node) {
    tree.nodes.push_back(std::move(node));
    return tree.root();
  }

  int leaf(Vertex v) { return push({BlockNodeKind::Leaf, -1, -1, v, VertexSet{v}}); }

  int decompose(const VertexSet& s, Vertex r) {
    if (s.size() == 1) return leaf(r);
    auto rest = connected_components(g, set_difference(s, VertexSet{r}));
    if (rest.size() >= 2) {
      const VertexSet& last = rest.back();
      int left = decompose(set_difference(s, last), r);
      int right = decompose(set_union(last, VertexSet{r}), r);
      return push({BlockNodeKind::Merge, left, right, r, VertexSet{r}});
    }
    std::vector<Vertex> nbrs;
    for (Vertex w : g.neighbors(r)) {
      if (s.contains(w)) nbrs.push_back(w);
    }
    VertexSet clique = set_union(VertexSet(nbrs), VertexSet{r});
    for (Vertex u : clique) {
      for (Vertex w : clique) {
        if (u < w && !g.has_edge(u, w)) throw WrongClass("graph is not a block graph");
      }
    }
    Vertex v = 0;
    for (Vertex c : nbrs) {
      bool simplicial = std::all_of(g.neighbors(c).begin(), g.neighbors(c).end(),
                                    [&](Vertex w) { return !s.contains(w) || clique.contains(w); });
      if (simplicial) {
        v = c;
        break;
      }
    }
    if (v == 0) v = nbrs.front();
    VertexSet without_v = set_difference(s, VertexSet{v});
    VertexSet g1;
    for (const auto& comp : connected_components(g, without_v)) {
      if (comp.contains(r)) g1 = comp;
    }
    VertexSet g2 = set_difference(s, g1);
    int left = decompose(g1, r);
    int right = decompose(g2, v);
    VertexSet rc = set_union(tree.nodes[left].root_clique, VertexSet{v});
    if (rc != clique) throw WrongClass("graph is not a block graph");
    return push({BlockNodeKind::Attach, left, right, r, std::move(rc)});
  }
};

// Tarjan's biconnected components; true iff every component is a clique.
bool blocks_are_cliques(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0), low(disc.size(), 0);
  std::vector<Edge> stack;
  int timer = 0;
  bool ok = true;

  auto check_block = [&](Edge until) {
    std::vector<Vertex> vs;
    std::size_t edges = 0;
    while (true) {
      Edge e = stack.back();
      stack.pop_back();
      vs.push_back(e.first);
      vs.push_back(e.second);
      ++edges;
      if (e == until) break;
    }
    std::size_t k = VertexSet(vs).size();
    if (edges != k * (k - 1) / 2) ok = false;
  };

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = ++timer;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[w] == 0) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) check_block({u, w});
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };

  for (Vertex v = 1; v <= n && ok; ++v) {
    if (disc[v] == 0) dfs(v, 0);
  }
  return ok;
}

}  // namespace

ChainOrdering chain_ordering(const Graph& g) {
  auto side = two_coloring(g);
  if (!side) throw WrongClass("graph is not bipartite");
  ChainOrdering ord;
  for (Vertex v = 1; v <= g.order(); ++v) ((*side)[v] == 0 ? ord.a : ord.b).push_back(v);
  auto by_degree = [&](Vertex x, Vertex y) {
    return std::pair(g.degree(x), x) < std::pair(g.degree(y), y);
  };
  std::sort(ord.a.begin(), ord.a.end(), by_degree);
  std::sort(ord.b.begin(), ord.b.end(), by_degree);
  if (!nested(g, ord.a) || !nested(g, ord.b)) throw WrongClass("neighborhoods not nested");
  return ord;
}

std::vector<Edge> chain_realized_edges(const Graph& g, const ChainOrdering& ord) {
  std::vector<Edge> out;
  const std::size_t nb = ord.b.size();
  for (Vertex a : ord.a) {
    auto d = static_cast<std::size_t>(g.degree(a));
    for (std::size_t j = nb - std::min(d, nb); j < nb; ++j) {
      Vertex b = ord.b[j];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet Cotree::leaves(int node) const {
  std::vector<Vertex> out;
  std::vector<int> stack{node};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (nodes[i].kind == CotreeKind::Leaf) {
      out.push_back(nodes[i].vertex);
    } else {
      stack.insert(stack.end(), nodes[i].children.begin(), nodes[i].children.end());
    }
  }
  return VertexSet(std::move(out));
}

std::vector<Edge> Cotree::realized_edges() const {
  std::vector<Edge> out;
  for (const auto& node : nodes) {
    if (node.kind != CotreeKind::Join) continue;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      VertexSet x = leaves(node.children[i]);
      for (std::size_t j = i + 1; j < node.children.size(); ++j) {
        for (Vertex u : x) {
          for (Vertex w : leaves(node.children[j])) out.emplace_back(std::min(u, w), std::max(u, w));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Cotree cotree(const Graph& g) {
  Cotree t;
  build_cotree(g, g.vertices(), t);
  return t;
}

std::vector<Edge> BlockTree::realized_edges() const {
  std::vector<Edge> out;
  for (const auto& node : nodes) {
    if (node.kind != BlockNodeKind::Attach) continue;
    Vertex v = nodes[node.right].root;
    for (Vertex c : nodes[node.left].root_clique) out.emplace_back(std::min(c, v), std::max(c, v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_block_graph(const Graph& g) { return blocks_are_cliques(g); }

BlockTree block_decomposition(const Graph& g, std::optional<Vertex> root) {
  Vertex r = root.value_or(1);
  if (!g.contains(r)) throw InvalidInput("root " + std::to_string(r) + " out of range");
  if (!is_connected(g)) throw WrongClass("graph is not connected");
  if (!is_block_graph(g)) throw WrongClass("graph is not a block graph");
  BlockBuilder builder{g, {}};
  builder.decompose(g.vertices(), r);
  return std::move(builder.tree);
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

// Hammer-Simeone degree-sequence test.
bool is_split(const Graph& g) {
  std::vector<long long> d;
  for (Vertex v = 1; v <= g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  long long m = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= static_cast<long long>(i)) m = static_cast<long long>(i) + 1;
  }
  long long head = std::accumulate(d.begin(), d.begin() + m, 0LL);
  long long tail = std::accumulate(d.begin() + m, d.end(), 0LL);
  return head == m * (m - 1) + tail;
}

std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g) {
  return p4_within(g, g.vertices());
}

bool is_cograph(const Graph& g) { return !find_induced_p4(g).has_value(); }

GraphClassReport classify(const Graph& g) {
  GraphClassReport r;
  const int n = g.order();
  const auto comps = connected_components(g);
  r.connected = comps.size() == 1;
  r.forest = g.size() + comps.size() == static_cast<std::size_t>(n);
  r.tree = r.forest && r.connected;
  r.path = r.tree && max_degree(g) <= 2;
  r.cycle = r.connected && n >= 3 && g.size() == static_cast<std::size_t>(n) && max_degree(g) == 2;
  r.block = is_block_graph(g);
  r.split = is_split(g);
  r.p4 = find_induced_p4(g);
  r.cograph = !r.p4.has_value();
  r.bipartite = is_bipartite(g);
  if (r.bipartite) {
    try {
      r.chain = chain_ordering(g);
      r.bipartite_chain = true;
    } catch (const WrongClass&) {
    }
  }
  r.join = n >= 2 && connected_components(g.complement()).size() >= 2;
  return r;
}

}  // namespace symisr

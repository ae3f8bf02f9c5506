#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "symisr/graph.hpp"

// Definitional class tests by exhaustive search, for graphs up to about
// eight vertices. Deliberately share nothing with the recognition module.
namespace symisr::brute {

inline bool adj(const Graph& g, int u, int v) { return g.has_edge(u, v); }

inline std::vector<int> subset(int n, unsigned mask) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (mask >> (v - 1) & 1U) out.push_back(v);
  }
  return out;
}

inline bool connected_mask(const Graph& g, unsigned mask) {
  if (mask == 0) return false;
  unsigned seen = mask & (~mask + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (int u = 1; u <= g.order(); ++u) {
      if (!(seen >> (u - 1) & 1U)) continue;
      for (int v = 1; v <= g.order(); ++v) {
        unsigned bit = 1U << (v - 1);
        if ((mask & bit) && !(seen & bit) && adj(g, u, v)) {
          seen |= bit;
          grew = true;
        }
      }
    }
  }
  return seen == mask;
}

inline unsigned full(const Graph& g) { return (1U << g.order()) - 1; }

inline unsigned reachable(const Graph& g, int from) {
  unsigned seen = 1U << (from - 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (int u = 1; u <= g.order(); ++u) {
      if (!(seen >> (u - 1) & 1U)) continue;
      for (int v = 1; v <= g.order(); ++v) {
        if (!(seen >> (v - 1) & 1U) && adj(g, u, v)) {
          seen |= 1U << (v - 1);
          grew = true;
        }
      }
    }
  }
  return seen;
}

inline bool connected(const Graph& g) { return connected_mask(g, full(g)); }

inline std::size_t edge_count(const Graph& g) {
  std::size_t m = 0;
  for (int u = 1; u <= g.order(); ++u) {
    for (int v = u + 1; v <= g.order(); ++v) m += adj(g, u, v);
  }
  return m;
}

// Some vertex order realises exactly the consecutive pairs (and the
// closing pair for cycles).
inline bool sequence_graph(const Graph& g, bool closed) {
  int n = g.order();
  if (closed && n < 3) return false;
  std::size_t want = closed ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n - 1);
  if (edge_count(g) != want) return false;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = adj(g, p[i], p[i + 1]);
    if (ok && closed) ok = adj(g, p[0], p[n - 1]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool path(const Graph& g) { return sequence_graph(g, false); }
inline bool cycle(const Graph& g) { return sequence_graph(g, true); }

// Every edge is a bridge of its component.
inline bool forest(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    std::vector<Edge> rest;
    for (auto e : g.edges()) {
      if (e != Edge{u, v}) rest.push_back(e);
    }
    Graph h = Graph::build(g.order(), rest);
    if (reachable(h, u) >> (v - 1) & 1U) return false;
  }
  return true;
}

inline bool tree(const Graph& g) { return connected(g) && forest(g); }

// Every vertex set inducing a 2-connected subgraph is a clique.
inline bool block(const Graph& g) {
  int n = g.order();
  for (unsigned s = 1; s <= full(g); ++s) {
    auto vs = subset(n, s);
    if (vs.size() < 3 || !connected_mask(g, s)) continue;
    bool two_connected = true;
    for (int v : vs) {
      if (!connected_mask(g, s & ~(1U << (v - 1)))) two_connected = false;
    }
    if (!two_connected) continue;
    for (int a : vs) {
      for (int b : vs) {
        if (a < b && !adj(g, a, b)) return false;
      }
    }
  }
  return true;
}

inline bool independent_mask(const Graph& g, unsigned s) {
  auto vs = subset(g.order(), s);
  for (int a : vs) {
    for (int b : vs) {
      if (a < b && adj(g, a, b)) return false;
    }
  }
  return true;
}

inline bool clique_mask(const Graph& g, unsigned s) {
  auto vs = subset(g.order(), s);
  for (int a : vs) {
    for (int b : vs) {
      if (a < b && !adj(g, a, b)) return false;
    }
  }
  return true;
}

inline bool split(const Graph& g) {
  for (unsigned s = 0; s <= full(g); ++s) {
    if (clique_mask(g, s) && independent_mask(g, full(g) & ~s)) return true;
  }
  return false;
}

inline bool bipartite(const Graph& g) {
  for (unsigned s = 0; s <= full(g); ++s) {
    if (independent_mask(g, s) && independent_mask(g, full(g) & ~s)) return true;
  }
  return false;
}

// Calls f(a, b, c, d) for every sequence of four distinct vertices.
template <class F>
bool any_quadruple(const Graph& g, F f) {
  int n = g.order();
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      for (int c = 1; c <= n; ++c) {
        for (int d = 1; d <= n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (f(a, b, c, d)) return true;
        }
      }
    }
  }
  return false;
}

inline bool induced_p4(const Graph& g, int a, int b, int c, int d) {
  return adj(g, a, b) && adj(g, b, c) && adj(g, c, d) && !adj(g, a, c) && !adj(g, a, d) && !adj(g, b, d);
}

inline bool cograph(const Graph& g) {
  return !any_quadruple(g, [&](int a, int b, int c, int d) { return induced_p4(g, a, b, c, d); });
}

// Bipartite without an induced 2K2.
inline bool chain(const Graph& g) {
  if (!bipartite(g)) return false;
  return !any_quadruple(g, [&](int a, int b, int c, int d) {
    return adj(g, a, b) && adj(g, c, d) && !adj(g, a, c) && !adj(g, a, d) && !adj(g, b, c) && !adj(g, b, d);
  });
}

// Some bipartition of V into nonempty parts has every cross pair adjacent.
inline bool join(const Graph& g) {
  for (unsigned s = 1; s < full(g); ++s) {
    bool all = true;
    for (int a : subset(g.order(), s)) {
      for (int b : subset(g.order(), full(g) & ~s)) all = all && adj(g, a, b);
    }
    if (all) return true;
  }
  return false;
}

inline int dominating_number(const Graph& g) {
  int best = g.order();
  for (unsigned s = 0; s <= full(g); ++s) {
    unsigned covered = s;
    for (int v : subset(g.order(), s)) {
      for (int w : g.neighbors(v)) covered |= 1U << (w - 1);
    }
    if (covered == full(g)) best = std::min(best, static_cast<int>(subset(g.order(), s).size()));
  }
  return best;
}

}  // namespace symisr::brute

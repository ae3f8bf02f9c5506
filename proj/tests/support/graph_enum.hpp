#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "symisr/graph.hpp"

namespace symisr::testing {

// Adjacency as one bit per unordered pair (i < j), 0-based vertices.
using Code = std::uint32_t;

inline int pair_bit(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline Graph graph_from_code(int n, Code code) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (code >> pair_bit(i, j, n) & 1U) edges.emplace_back(i + 1, j + 1);
    }
  }
  return Graph::build(n, edges);
}

inline Code code_of(const Graph& g) {
  Code c = 0;
  for (auto [u, v] : g.edges()) c |= Code{1} << pair_bit(u - 1, v - 1, g.order());
  return c;
}

// Minimum code over relabellings that list vertices by nondecreasing
// degree. Isomorphic graphs get the same value.
inline Code canonical_code(int n, Code code) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && (code >> pair_bit(i, j, n) & 1U)) ++deg[i];
    }
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) of equal degree
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  Code best = ~Code{0};
  while (true) {
    Code c = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (code >> pair_bit(order[i], order[j], n) & 1U) c |= Code{1} << pair_bit(i, j, n);
      }
    }
    best = std::min(best, c);
    std::size_t k = 0;
    for (; k < cells.size(); ++k) {
      auto [b, e] = cells[k];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (k == cells.size()) break;
  }
  return best;
}

// One representative per isomorphism class on exactly n vertices, built by
// adding a vertex to every class on n - 1 vertices.
inline std::vector<Graph> all_graphs(int n) {
  std::set<Code> classes{0};
  for (int m = 2; m <= n; ++m) {
    std::set<Code> next;
    for (Code c : classes) {
      Code lifted = 0;
      for (int i = 0; i < m - 1; ++i) {
        for (int j = i + 1; j < m - 1; ++j) {
          if (c >> pair_bit(i, j, m - 1) & 1U) lifted |= Code{1} << pair_bit(i, j, m);
        }
      }
      for (Code nb = 0; nb < (Code{1} << (m - 1)); ++nb) {
        Code g = lifted;
        for (int i = 0; i < m - 1; ++i) {
          if (nb >> i & 1U) g |= Code{1} << pair_bit(i, m - 1, m);
        }
        next.insert(canonical_code(m, g));
      }
    }
    classes = std::move(next);
  }
  std::vector<Graph> out;
  for (Code c : classes) out.push_back(graph_from_code(n, c));
  return out;
}

inline std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

// Every labelled graph on n vertices.
inline std::vector<Graph> all_labelled_graphs(int n) {
  std::vector<Graph> out;
  int pairs = n * (n - 1) / 2;
  for (Code c = 0; c < (Code{1} << pairs); ++c) out.push_back(graph_from_code(n, c));
  return out;
}

}  // namespace symisr::testing

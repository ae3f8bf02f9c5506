#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symisr/errors.hpp"

namespace symisr {

using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free list of vertex ids. Range membership is checked
// against a graph by the operations that take both.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(Vertex v) const;
  Vertex front() const { return items_.front(); }
  Vertex back() const { return items_.back(); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Vertex>& items() const { return items_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> items_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b);

// "{1,3}" style rendering, "{}" for the empty set.
std::string to_string(const VertexSet& s);

// Immutable simple undirected graph on vertices 1..n.
class Graph {
 public:
  // Collapses duplicate edges; throws InvalidInput on self-loops,
  // out-of-range endpoints or n < 1.
  static Graph build(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return m_; }
  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  VertexSet vertices() const;

  // Subgraph induced by s, relabelled 1..|s| in increasing order of the
  // original ids. to_original[i - 1] is the original id of new vertex i.
  Graph induced(const VertexSet& s, std::vector<Vertex>* to_original = nullptr) const;

  Graph complement() const;

 private:
  Graph() = default;

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph::build(n, edges); }
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return Graph::build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// Throws InvalidInput if some vertex of s lies outside 1..n.
void check_range(const Graph& g, const VertexSet& s);

// Maximal connected subsets of G[s], ordered by minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s);
std::vector<VertexSet> connected_components(const Graph& g);

// True iff s is nonempty and G[s] is connected.
bool is_connected_set(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);

int max_degree(const Graph& g);
int degeneracy(const Graph& g);

}  // namespace symisr

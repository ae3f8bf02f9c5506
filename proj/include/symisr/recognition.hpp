#pragma once

#include <array>
#include <optional>
#include <vector>

#include "symisr/graph.hpp"

namespace symisr {

// Bipartition of a chain graph, each side in nondecreasing degree order
// (ties by id), so neighborhoods are nested along each list.
struct ChainOrdering {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};

// Throws WrongClass if g is not bipartite or the neighborhoods are not
// nested. For a connected graph, side a holds vertex 1.
ChainOrdering chain_ordering(const Graph& g);

// Edge set re-expanded from the ordering alone: a_i ~ b_j iff b_j is among
// the deg(a_i) last vertices of the b list.
std::vector<Edge> chain_realized_edges(const Graph& g, const ChainOrdering& ord);

enum class CotreeKind { Leaf, Union, Join };

struct CotreeNode {
  CotreeKind kind;
  Vertex vertex = 0;          // Leaf only
  std::vector<int> children;  // indices into Cotree::nodes
};

// Children precede parents; the root is the last node.
struct Cotree {
  std::vector<CotreeNode> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  VertexSet leaves(int node) const;
  std::vector<Edge> realized_edges() const;
};

// Throws P4Found with an induced P4 when g is not a cograph.
Cotree cotree(const Graph& g);

enum class BlockNodeKind { Leaf, Merge, Attach };

struct BlockNode {
  BlockNodeKind kind;
  int left = -1;
  int right = -1;
  Vertex root = 0;
  VertexSet root_clique;
};

// Children precede parents; the root is the last node.
struct BlockTree {
  std::vector<BlockNode> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  // Union of the edges each Attach node adds between root(right) and
  // rootClique(left).
  std::vector<Edge> realized_edges() const;
};

bool is_block_graph(const Graph& g);

// Decomposition of a connected block graph into single vertices joined by
// root identification (Merge) and root-clique attachment (Attach). Root
// defaults to vertex 1. Throws WrongClass on disconnected or non-block input.
BlockTree block_decomposition(const Graph& g, std::optional<Vertex> root = std::nullopt);

struct GraphClassReport {
  bool connected = false;
  bool path = false;
  bool cycle = false;
  bool tree = false;
  bool forest = false;
  bool block = false;
  bool split = false;
  bool cograph = false;
  bool bipartite = false;
  bool bipartite_chain = false;
  bool join = false;

  std::optional<ChainOrdering> chain;
  std::optional<std::array<Vertex, 4>> p4;
};

GraphClassReport classify(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_split(const Graph& g);
bool is_cograph(const Graph& g);
std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g);

}  // namespace symisr

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>

#include "symisr/reconfig.hpp"

namespace symisr {

using Rng = std::mt19937_64;

enum class GraphClass { Path, Cycle, Tree, Forest, Block, Cograph, Chain, Split };

std::optional<GraphClass> parse_graph_class(const std::string& name);
std::string class_name(GraphClass c);
// Smallest order the generator for c accepts.
int min_order(GraphClass c);

// Random member of c on exactly n vertices. Trees, blocks and chain graphs
// are connected; cographs, forests and split graphs may not be.
Graph random_graph(GraphClass c, int n, Rng& rng);
Graph relabel(const Graph& g, Rng& rng);
// Greedy over a random vertex order, keeping each free vertex with
// probability 1/2.
VertexSet random_independent_set(const Graph& g, Rng& rng);

std::uint64_t splitmix64(std::uint64_t x);

struct FuzzOptions {
  GraphClass cls = GraphClass::Tree;
  int n = 9;
  int trials = 200;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct FuzzSummary {
  int trials = 0;
  int mismatches = 0;
};

// Compares the class solver with the oracle on random instances and writes
// a CSV report. The report depends only on the options, not on thread
// count or timing. Throws InvalidInput for classes without a solver.
FuzzSummary run_fuzz(const FuzzOptions& opt, std::ostream& out);

}  // namespace symisr

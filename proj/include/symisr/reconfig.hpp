#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symisr/graph.hpp"

namespace symisr {

struct Instance {
  Graph graph;
  VertexSet source;
  VertexSet target;
  std::optional<int> budget;
};

// Throws InvalidInput on out-of-range vertices or a negative budget,
// NotIndependent if either endpoint set has an internal edge.
Instance make_instance(Graph g, VertexSet source, VertexSet target,
                       std::optional<int> budget = std::nullopt);

struct ReconfigSequence {
  std::vector<VertexSet> sets;

  std::size_t steps() const { return sets.empty() ? 0 : sets.size() - 1; }
};

// G[i xor j] connected and nonempty. Throws NotIndependent.
bool adjacent(const Graph& g, const VertexSet& i, const VertexSet& j);

// i xor x. Throws InvalidInput if x is empty or G[x] is disconnected.
VertexSet flip(const Graph& g, const VertexSet& i, const VertexSet& x);

int cc_bound(const Instance& inst);

struct ValidationReport {
  bool ok = false;
  std::size_t steps = 0;
  std::size_t index = 0;  // first failing set or step
  std::string reason;
};

ValidationReport validate_sequence(const Instance& inst, const ReconfigSequence& seq);

struct ComponentInstance {
  Instance instance;
  std::vector<Vertex> to_original;  // local id i maps to to_original[i - 1]
  bool solved = false;              // restricted source equals restricted target
};

// One sub-instance per connected component, ordered by minimum vertex.
// Budgets are not carried over.
std::vector<ComponentInstance> split_by_components(const Instance& inst);

// Flips the components of G[source xor target] one at a time, ascending by
// minimum vertex.
ReconfigSequence component_flip_sequence(const Instance& inst);

// Lifts per-component sequences back to the full instance, applying them
// one component after another.
ReconfigSequence concatenate(const Instance& inst, const std::vector<ComponentInstance>& parts,
                             const std::vector<ReconfigSequence>& local);

}  // namespace symisr

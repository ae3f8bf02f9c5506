#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

#include "symisr/reconfig.hpp"

namespace symisr {

using Mask = std::uint64_t;
using Rational = boost::rational<long long>;

// Linear objective; coeff[v] for v in 1..n, missing entries count as zero.
struct Objective {
  std::vector<Rational> coeff;

  Rational value(const VertexSet& s) const;
};

enum class NeighborStrategy { Pairwise, FlipEnumeration, Auto };

struct OracleConfig {
  std::size_t max_independent_sets = 200000;
  NeighborStrategy strategy = NeighborStrategy::Auto;
  std::optional<Objective> objective;
};

// Bit v-1 of a mask stands for vertex v. Graphs above 64 vertices are
// rejected with InvalidInput.
Mask to_mask(const VertexSet& s);
VertexSet from_mask(Mask m);

// Every independent set, ascending by mask value (so {1,3} follows {3}).
// Throws CapExceeded once more than cap sets have been found.
std::vector<VertexSet> enumerate_independent_sets(const Graph& g, std::size_t cap);

// Independent sets J adjacent to i, ascending by mask, found by growing
// connected flip sets rather than by testing every independent set.
std::vector<VertexSet> flip_neighbors(const Graph& g, const VertexSet& i);

struct OracleResult {
  int length = 0;
  ReconfigSequence witness;
};

OracleResult bfs_distance(const Instance& inst, const OracleConfig& cfg = {});

// Same search stopped after max_depth levels; nullopt if the target is
// farther away.
std::optional<OracleResult> bfs_distance_within(const Instance& inst, int max_depth,
                                                const OracleConfig& cfg = {});

// Shortest sequence whose objective strictly increases at every step.
// Throws InvalidInput if cfg has no objective.
std::optional<OracleResult> bfs_monotone(const Instance& inst, const OracleConfig& cfg);

// The full reconfiguration graph of a small graph, for all-pairs checks.
class ReconfigurationGraph {
 public:
  ReconfigurationGraph(const Graph& g, std::size_t cap);

  std::size_t size() const { return sets_.size(); }
  const VertexSet& set(std::size_t i) const { return sets_[i]; }
  std::size_t index_of(const VertexSet& s) const;
  const std::vector<int>& neighbors(std::size_t i) const { return adj_[i]; }
  // BFS distances from set i to every set.
  std::vector<int> distances_from(std::size_t i) const;

 private:
  std::vector<VertexSet> sets_;
  std::unordered_map<Mask, std::size_t> index_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace symisr

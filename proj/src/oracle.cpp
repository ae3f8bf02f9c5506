#include "symisr/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace symisr {

namespace {

constexpr std::size_t kAutoPairwiseLimit = 20000;
constexpr int kAutoFlipMaxOrder = 16;

struct Bits {
  int n = 0;
  std::vector<Mask> adj;  // adj[i] = neighbors of vertex i + 1

  explicit Bits(const Graph& g) : n(g.order()), adj(static_cast<std::size_t>(g.order()), 0) {
    if (n > 64) throw InvalidInput("oracle supports at most 64 vertices, got " + std::to_string(n));
    for (Vertex v = 1; v <= n; ++v) {
      for (Vertex w : g.neighbors(v)) adj[v - 1] |= Mask{1} << (w - 1);
    }
  }

  Mask neighborhood(Mask s) const {
    Mask out = 0;
    for (Mask rest = s; rest; rest &= rest - 1) out |= adj[std::countr_zero(rest)];
    return out;
  }

  bool connected(Mask x) const {
    if (x == 0) return false;
    Mask reached = x & -x;
    Mask frontier = reached;
    while (frontier) {
      Mask next = neighborhood(frontier) & x & ~reached;
      reached |= next;
      frontier = next;
    }
    return reached == x;
  }

  bool independent(Mask s) const {
    for (Mask rest = s; rest; rest &= rest - 1) {
      if (adj[std::countr_zero(rest)] & s) return false;
    }
    return true;
  }
};

struct FlipSearch {
  const Bits& b;
  Mask current;
  std::vector<Mask>* out;

  // Connected flip sets are grown in the usual exclusive-neighborhood way so
  // that each one is produced once, from its minimum vertex.
  void extend(Mask sub, Mask ext, Mask sub_nbrs, int v) {
    Mask added = sub & ~current;
    Mask required = b.neighborhood(added) & current;
    if (required & ~(sub | ext)) return;
    if ((required & ~sub) == 0) out->push_back(current ^ sub);
    Mask above = ~((Mask{2} << v) - 1);
    while (ext) {
      Mask w = ext & -ext;
      ext &= ~w;
      int wi = std::countr_zero(w);
      if (!(current & w) && (b.adj[wi] & added)) continue;
      Mask excl = b.adj[wi] & ~(sub | sub_nbrs) & above;
      extend(sub | w, ext | excl, sub_nbrs | b.adj[wi], v);
    }
  }
};

std::vector<Mask> flip_neighbor_masks(const Bits& b, Mask current) {
  std::vector<Mask> out;
  FlipSearch search{b, current, &out};
  for (int v = 0; v < b.n; ++v) {
    Mask bit = Mask{1} << v;
    Mask above = ~((Mask{2} << v) - 1);
    search.extend(bit, b.adj[v] & above, b.adj[v], v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> enumerate_masks(const Bits& b, std::size_t cap) {
  std::vector<Mask> out;
  // Branching on the highest vertex first, "out" before "in", emits masks in
  // ascending order.
  auto rec = [&](auto&& self, int v, Mask cur, Mask forbidden) -> void {
    if (v < 0) {
      out.push_back(cur);
      if (out.size() > cap) throw CapExceeded(out.size(), cap);
      return;
    }
    self(self, v - 1, cur, forbidden);
    Mask bit = Mask{1} << v;
    if (!(forbidden & bit)) self(self, v - 1, cur | bit, forbidden | b.adj[v]);
  };
  rec(rec, b.n - 1, 0, 0);
  return out;
}

Rational objective_value(const Objective& obj, Mask m) {
  Rational sum = 0;
  for (Mask rest = m; rest; rest &= rest - 1) {
    auto v = static_cast<std::size_t>(std::countr_zero(rest)) + 1;
    if (v < obj.coeff.size()) sum += obj.coeff[v];
  }
  return sum;
}

std::optional<OracleResult> search(const Instance& inst, const OracleConfig& cfg, int max_depth,
                                   bool monotone) {
  if (cfg.max_independent_sets == 0) throw InvalidInput("independent set cap must be positive");
  if (monotone && !cfg.objective) throw InvalidInput("monotone search needs an objective");
  Bits b(inst.graph);
  const Mask source = to_mask(inst.source);
  const Mask target = to_mask(inst.target);
  if (source == target) return OracleResult{0, ReconfigSequence{{inst.source}}};

  NeighborStrategy strategy = cfg.strategy;
  std::vector<Mask> all;
  if (strategy == NeighborStrategy::Auto) {
    if (b.n <= kAutoFlipMaxOrder) {
      strategy = NeighborStrategy::FlipEnumeration;
    } else {
      all = enumerate_masks(b, std::min(cfg.max_independent_sets, kAutoPairwiseLimit));
      strategy = NeighborStrategy::Pairwise;
    }
  } else if (strategy == NeighborStrategy::Pairwise) {
    all = enumerate_masks(b, cfg.max_independent_sets);
  }

  auto neighbors = [&](Mask u) {
    if (strategy == NeighborStrategy::FlipEnumeration) return flip_neighbor_masks(b, u);
    std::vector<Mask> out;
    for (Mask w : all) {
      if (w != u && b.connected(u ^ w)) out.push_back(w);
    }
    return out;
  };

  std::unordered_map<Mask, Mask> parent{{source, source}};
  std::vector<Mask> frontier{source};
  for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
    std::vector<Mask> next;
    for (Mask u : frontier) {
      Rational here = monotone ? objective_value(*cfg.objective, u) : Rational(0);
      for (Mask w : neighbors(u)) {
        if (parent.count(w)) continue;
        if (monotone && !(objective_value(*cfg.objective, w) > here)) continue;
        parent.emplace(w, u);
        if (parent.size() > cfg.max_independent_sets) {
          throw CapExceeded(parent.size(), cfg.max_independent_sets);
        }
        if (w == target) {
          std::vector<VertexSet> path;
          for (Mask cur = target; cur != source; cur = parent.at(cur)) path.push_back(from_mask(cur));
          path.push_back(inst.source);
          std::reverse(path.begin(), path.end());
          return OracleResult{depth, ReconfigSequence{std::move(path)}};
        }
        next.push_back(w);
      }
    }
    frontier.swap(next);
  }
  return std::nullopt;
}

}  // namespace

Rational Objective::value(const VertexSet& s) const {
  Rational sum = 0;
  for (Vertex v : s) {
    if (v >= 0 && static_cast<std::size_t>(v) < coeff.size()) sum += coeff[v];
  }
  return sum;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) {
    if (v < 1 || v > 64) throw InvalidInput("vertex " + std::to_string(v) + " outside mask range");
    m |= Mask{1} << (v - 1);
  }
  return m;
}

VertexSet from_mask(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return VertexSet(std::move(out));
}

std::vector<VertexSet> enumerate_independent_sets(const Graph& g, std::size_t cap) {
  Bits b(g);
  std::vector<VertexSet> out;
  for (Mask m : enumerate_masks(b, cap)) out.push_back(from_mask(m));
  return out;
}

std::vector<VertexSet> flip_neighbors(const Graph& g, const VertexSet& i) {
  Bits b(g);
  std::vector<VertexSet> out;
  for (Mask m : flip_neighbor_masks(b, to_mask(i))) out.push_back(from_mask(m));
  return out;
}

OracleResult bfs_distance(const Instance& inst, const OracleConfig& cfg) {
  auto r = search(inst, cfg, inst.graph.order() + 1, false);
  if (!r) throw std::logic_error("target unreachable in reconfiguration graph");
  return *r;
}

std::optional<OracleResult> bfs_distance_within(const Instance& inst, int max_depth,
                                                const OracleConfig& cfg) {
  return search(inst, cfg, max_depth, false);
}

std::optional<OracleResult> bfs_monotone(const Instance& inst, const OracleConfig& cfg) {
  return search(inst, cfg, static_cast<int>(cfg.max_independent_sets), true);
}

ReconfigurationGraph::ReconfigurationGraph(const Graph& g, std::size_t cap) {
  Bits b(g);
  std::vector<Mask> masks = enumerate_masks(b, cap);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    sets_.push_back(from_mask(masks[i]));
    index_.emplace(masks[i], i);
  }
  adj_.resize(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if (b.connected(masks[i] ^ masks[j])) {
        adj_[i].push_back(static_cast<int>(j));
        adj_[j].push_back(static_cast<int>(i));
      }
    }
  }
}

std::size_t ReconfigurationGraph::index_of(const VertexSet& s) const {
  auto it = index_.find(to_mask(s));
  if (it == index_.end()) throw InvalidInput(to_string(s) + " is not an independent set");
  return it->second;
}

std::vector<int> ReconfigurationGraph::distances_from(std::size_t i) const {
  std::vector<int> dist(sets_.size(), -1);
  std::deque<std::size_t> queue{i};
  dist[i] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (int w : adj_[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(static_cast<std::size_t>(w));
      }
    }
  }
  return dist;
}

}  // namespace symisr

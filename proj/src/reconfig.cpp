#include "symisr/reconfig.hpp"

#include <stdexcept>

namespace symisr {

namespace {

VertexSet restrict_to(const VertexSet& s, const VertexSet& comp, const std::vector<int>& local) {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    if (comp.contains(v)) out.push_back(local[v]);
  }
  return VertexSet(std::move(out));
}

}  // namespace

Instance make_instance(Graph g, VertexSet source, VertexSet target, std::optional<int> budget) {
  check_range(g, source);
  check_range(g, target);
  if (budget && *budget < 0) throw InvalidInput("budget must be nonnegative");
  if (!is_independent(g, source)) throw NotIndependent("source " + to_string(source) + " is not independent");
  if (!is_independent(g, target)) throw NotIndependent("target " + to_string(target) + " is not independent");
  return Instance{std::move(g), std::move(source), std::move(target), budget};
}

bool adjacent(const Graph& g, const VertexSet& i, const VertexSet& j) {
  if (!is_independent(g, i)) throw NotIndependent(to_string(i) + " is not independent");
  if (!is_independent(g, j)) throw NotIndependent(to_string(j) + " is not independent");
  return is_connected_set(g, symmetric_difference(i, j));
}

VertexSet flip(const Graph& g, const VertexSet& i, const VertexSet& x) {
  if (!is_connected_set(g, x)) throw InvalidInput("flip set " + to_string(x) + " is empty or disconnected");
  check_range(g, i);
  return symmetric_difference(i, x);
}

int cc_bound(const Instance& inst) {
  return static_cast<int>(
      connected_components(inst.graph, symmetric_difference(inst.source, inst.target)).size());
}

ValidationReport validate_sequence(const Instance& inst, const ReconfigSequence& seq) {
  ValidationReport rep;
  rep.steps = seq.steps();
  auto fail = [&](std::size_t index, std::string reason) {
    rep.ok = false;
    rep.index = index;
    rep.reason = std::move(reason);
    return rep;
  };
  if (seq.sets.empty()) return fail(0, "empty sequence");
  const int n = inst.graph.order();
  for (std::size_t i = 0; i < seq.sets.size(); ++i) {
    const VertexSet& s = seq.sets[i];
    std::string tag = "set " + std::to_string(i);
    if (!s.empty() && (s.front() < 1 || s.back() > n)) return fail(i, tag + " has a vertex out of range");
    if (!is_independent(inst.graph, s)) return fail(i, tag + " not independent");
    if (i == 0 && s != inst.source) return fail(0, "set 0 is not the source");
    if (i > 0 && !is_connected_set(inst.graph, symmetric_difference(seq.sets[i - 1], s))) {
      return fail(i, "step " + std::to_string(i) + " not adjacent");
    }
  }
  std::size_t last = seq.sets.size() - 1;
  if (seq.sets.back() != inst.target) return fail(last, "set " + std::to_string(last) + " is not the target");
  if (inst.budget && rep.steps > static_cast<std::size_t>(*inst.budget)) {
    return fail(last, "length " + std::to_string(rep.steps) + " exceeds budget " + std::to_string(*inst.budget));
  }
  rep.ok = true;
  return rep;
}

std::vector<ComponentInstance> split_by_components(const Instance& inst) {
  const auto& g = inst.graph;
  std::vector<ComponentInstance> out;
  std::vector<int> local(static_cast<std::size_t>(g.order()) + 1, 0);
  for (const auto& comp : connected_components(g)) {
    std::vector<Vertex> to_original;
    Graph h = g.induced(comp, &to_original);
    for (std::size_t i = 0; i < to_original.size(); ++i) local[to_original[i]] = static_cast<int>(i) + 1;
    VertexSet s = restrict_to(inst.source, comp, local);
    VertexSet t = restrict_to(inst.target, comp, local);
    bool solved = s == t;
    out.push_back({Instance{std::move(h), std::move(s), std::move(t), std::nullopt}, std::move(to_original), solved});
  }
  return out;
}

ReconfigSequence component_flip_sequence(const Instance& inst) {
  ReconfigSequence seq{{inst.source}};
  VertexSet cur = inst.source;
  for (const auto& comp : connected_components(inst.graph, symmetric_difference(inst.source, inst.target))) {
    cur = symmetric_difference(cur, comp);
    seq.sets.push_back(cur);
  }
  return seq;
}

ReconfigSequence concatenate(const Instance& inst, const std::vector<ComponentInstance>& parts,
                             const std::vector<ReconfigSequence>& local) {
  if (parts.size() != local.size()) throw std::logic_error("component count mismatch");
  ReconfigSequence seq{{inst.source}};
  VertexSet cur = inst.source;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const auto& map = parts[c].to_original;
    auto lift = [&](const VertexSet& s) {
      std::vector<Vertex> out;
      for (Vertex v : s) out.push_back(map[v - 1]);
      return VertexSet(std::move(out));
    };
    for (std::size_t i = 1; i < local[c].sets.size(); ++i) {
      VertexSet delta = symmetric_difference(lift(local[c].sets[i - 1]), lift(local[c].sets[i]));
      cur = symmetric_difference(cur, delta);
      seq.sets.push_back(cur);
    }
  }
  return seq;
}

}  // namespace symisr

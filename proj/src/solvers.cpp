#include "symisr/solvers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace symisr {

namespace {

SolveResult trivial_or_adjacent(const Instance& inst, int cc, const char* tag) {
  SolveResult r;
  r.cc_bound = cc;
  r.solver_used = tag;
  r.length = cc == 0 ? 0 : 1;
  r.witness = ReconfigSequence{{inst.source}};
  if (cc != 0) r.witness->sets.push_back(inst.target);
  return r;
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw WrongClass(std::string(what) + ": graph is not connected");
}

void check_witness(const Instance& inst, const SolveResult& r) {
  if (!r.witness) return;
  auto rep = validate_sequence(Instance{inst.graph, inst.source, inst.target, std::nullopt}, *r.witness);
  if (!rep.ok || rep.steps != static_cast<std::size_t>(r.length)) {
    throw std::logic_error(r.solver_used + " produced an invalid witness: " + rep.reason);
  }
}

SolveResult run_dp(const Instance& inst, bool tree) {
  const Graph& g = inst.graph;
  const int cc = cc_bound(inst);
  BlockTree bt = block_decomposition(g);
  // Every subtree value on an optimal route is at most the final answer,
  // which never exceeds cc, so larger entries can be dropped.
  int cap = std::min(g.order(), cc);
  int answer = tree ? tree_dp(inst, bt, cap).answer : block_dp(inst, bt, cap).answer;
  if (answer >= kInfinity) throw std::logic_error("block table has no finite entry at the root");
  SolveResult r;
  r.length = answer;
  r.cc_bound = cc;
  r.solver_used = tree ? "tree" : "block";
  return r;
}

ReconfigSequence chain_witness(const VertexSet& s, const VertexSet& mid, const VertexSet& t) {
  return ReconfigSequence{{s, mid, t}};
}

}  // namespace

SolveResult solve_path_cycle(const Instance& inst) {
  auto rep = classify(inst.graph);
  if (!rep.path && !rep.cycle) throw WrongClass("graph is neither a path nor a cycle");
  SolveResult r;
  r.cc_bound = cc_bound(inst);
  r.length = r.cc_bound;
  r.witness = component_flip_sequence(inst);
  r.solver_used = rep.path ? "path" : "cycle";
  check_witness(inst, r);
  return r;
}

SolveResult solve_tree(const Instance& inst) {
  require_connected(inst.graph, "tree solver");
  if (inst.graph.size() + 1 != static_cast<std::size_t>(inst.graph.order())) {
    throw WrongClass("graph is not a tree");
  }
  return run_dp(inst, true);
}

SolveResult solve_block(const Instance& inst) {
  require_connected(inst.graph, "block solver");
  if (!is_block_graph(inst.graph)) throw WrongClass("graph is not a block graph");
  return run_dp(inst, false);
}

SolveResult solve_cograph(const Instance& inst) {
  const Graph& g = inst.graph;
  Cotree ct = cotree(g);
  SolveResult r;
  r.cc_bound = cc_bound(inst);
  r.solver_used = "cograph";
  ReconfigSequence seq{{inst.source}};
  VertexSet cur = inst.source;
  auto step = [&](const VertexSet& x) {
    cur = symmetric_difference(cur, x);
    seq.sets.push_back(cur);
    ++r.length;
  };

  // A disconnected cograph is a union at the root; every other node is
  // handled in one piece since its two restricted sets are at most 2 apart.
  std::vector<int> parts;
  const CotreeNode& top = ct.nodes[ct.root()];
  if (top.kind == CotreeKind::Union) {
    parts = top.children;
  } else {
    parts = {ct.root()};
  }
  for (int part : parts) {
    VertexSet leaves = ct.leaves(part);
    VertexSet s = set_intersection(inst.source, leaves);
    VertexSet t = set_intersection(inst.target, leaves);
    if (s == t) continue;
    VertexSet diff = symmetric_difference(s, t);
    if (is_connected_set(g, diff)) {
      step(diff);
      continue;
    }
    // Not adjacent, so both sets sit inside one side of this join node.
    const CotreeNode& node = ct.nodes[part];
    if (node.kind != CotreeKind::Join) throw std::logic_error("cotree leaf with disconnected difference");
    VertexSet both = set_union(s, t);
    Vertex v = 0;
    for (int child : node.children) {
      VertexSet side = ct.leaves(child);
      if (set_intersection(side, both).empty()) {
        if (v == 0 || side.front() < v) v = side.front();
      }
    }
    step(symmetric_difference(s, VertexSet{v}));
    step(symmetric_difference(VertexSet{v}, t));
  }
  r.witness = std::move(seq);
  check_witness(inst, r);
  return r;
}

SolveResult solve_chain(const Instance& inst) {
  const Graph& g = inst.graph;
  require_connected(g, "chain solver");
  ChainOrdering ord = chain_ordering(g);
  const VertexSet& is = inst.source;
  const VertexSet& it = inst.target;
  const int cc = cc_bound(inst);
  if (cc <= 1) return trivial_or_adjacent(inst, cc, "chain");

  SolveResult r;
  r.cc_bound = cc;
  r.solver_used = "chain";
  auto finish = [&](int length, ReconfigSequence seq) {
    r.length = length;
    r.witness = std::move(seq);
    check_witness(inst, r);
    return r;
  };

  for (Vertex v = 1; v <= g.order(); ++v) {
    VertexSet mid = symmetric_difference(is, VertexSet{v});
    if (mid != it && is_independent(g, mid) && adjacent(g, mid, it)) return finish(2, chain_witness(is, mid, it));
  }
  for (Vertex v = 1; v <= g.order(); ++v) {
    VertexSet mid = symmetric_difference(it, VertexSet{v});
    if (mid != is && is_independent(g, mid) && adjacent(g, is, mid)) return finish(2, chain_witness(is, mid, it));
  }

  const VertexSet side_a(ord.a), side_b(ord.b);
  const VertexSet both = set_union(is, it);
  auto last_in = [&](const std::vector<Vertex>& order) -> Vertex {
    for (auto v = order.rbegin(); v != order.rend(); ++v) {
      if (both.contains(*v)) return *v;
    }
    return 0;
  };
  auto outside = [&](const VertexSet& s, const VertexSet& side, Vertex hub) {
    auto nb = g.neighbors(hub);
    return set_difference(set_intersection(s, side), VertexSet(std::vector<Vertex>(nb.begin(), nb.end())));
  };
  const Vertex a_top = ord.a.back(), b_top = ord.b.back();

  if (Vertex a_max = last_in(ord.a); a_max != 0 && outside(is, side_b, a_max) == outside(it, side_b, a_max)) {
    const VertexSet& other = is.contains(a_max) ? it : is;
    VertexSet mid = set_union(set_intersection(other, side_b), VertexSet{b_top});
    return finish(2, chain_witness(is, mid, it));
  }
  if (Vertex b_max = last_in(ord.b); b_max != 0 && outside(is, side_a, b_max) == outside(it, side_a, b_max)) {
    const VertexSet& other = is.contains(b_max) ? it : is;
    VertexSet mid = set_union(set_intersection(other, side_a), VertexSet{a_top});
    return finish(2, chain_witness(is, mid, it));
  }

  VertexSet s = set_union(VertexSet{a_top}, set_intersection(is, side_a));
  VertexSet t = set_union(VertexSet{b_top}, set_intersection(it, side_b));
  return finish(3, ReconfigSequence{{is, s, t, it}});
}

std::optional<SolverChoice> parse_solver_choice(const std::string& name) {
  static const std::map<std::string, SolverChoice> names{
      {"auto", SolverChoice::Auto},   {"path", SolverChoice::Path},       {"cycle", SolverChoice::Cycle},
      {"tree", SolverChoice::Tree},   {"block", SolverChoice::Block},     {"cograph", SolverChoice::Cograph},
      {"chain", SolverChoice::Chain}, {"oracle", SolverChoice::Oracle}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

SolveResult solve(const Instance& inst, SolverChoice choice, const OracleConfig& cfg) {
  const int cc = cc_bound(inst);
  if (choice == SolverChoice::Oracle) {
    auto o = bfs_distance(inst, cfg);
    return SolveResult{o.length, std::move(o.witness), "oracle", cc};
  }

  auto parts = split_by_components(inst);
  std::vector<std::string> tags;
  std::vector<ReconfigSequence> local;
  bool have_witness = true;
  int total = 0;
  for (const auto& part : parts) {
    const Instance& sub = part.instance;
    if (part.solved) {
      local.push_back(ReconfigSequence{{sub.source}});
      continue;
    }
    SolveResult r;
    switch (choice) {
      case SolverChoice::Path:
        if (!classify(sub.graph).path) throw WrongClass("component is not a path");
        r = solve_path_cycle(sub);
        break;
      case SolverChoice::Cycle:
        if (!classify(sub.graph).cycle) throw WrongClass("component is not a cycle");
        r = solve_path_cycle(sub);
        break;
      case SolverChoice::Tree: r = solve_tree(sub); break;
      case SolverChoice::Block: r = solve_block(sub); break;
      case SolverChoice::Cograph: r = solve_cograph(sub); break;
      case SolverChoice::Chain: r = solve_chain(sub); break;
      default: {
        auto rep = classify(sub.graph);
        if (rep.path || rep.cycle) {
          r = solve_path_cycle(sub);
        } else if (rep.tree) {
          r = solve_tree(sub);
        } else if (rep.block) {
          r = solve_block(sub);
        } else if (rep.cograph) {
          r = solve_cograph(sub);
        } else if (rep.bipartite_chain) {
          r = solve_chain(sub);
        } else {
          auto o = bfs_distance(sub, cfg);
          r = SolveResult{o.length, std::move(o.witness), "oracle", cc_bound(sub)};
        }
      }
    }
    total += r.length;
    if (std::find(tags.begin(), tags.end(), r.solver_used) == tags.end()) tags.push_back(r.solver_used);
    if (r.witness) {
      local.push_back(std::move(*r.witness));
    } else {
      have_witness = false;
      local.push_back(ReconfigSequence{});
    }
  }

  SolveResult out;
  out.length = total;
  out.cc_bound = cc;
  for (const auto& tag : tags) out.solver_used += (out.solver_used.empty() ? "" : "+") + tag;
  if (out.solver_used.empty()) out.solver_used = "trivial";
  if (have_witness) {
    out.witness = concatenate(inst, parts, local);
    check_witness(inst, out);
  }
  return out;
}

}  // namespace symisr

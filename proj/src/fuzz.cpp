#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <thread>

#include "symisr/generators.hpp"
#include "symisr/oracle.hpp"
#include "symisr/solvers.hpp"

namespace symisr {

namespace {

struct TrialRow {
  int n = 0;
  std::size_t m = 0;
  int length = 0;
  int oracle = 0;
  int cc = 0;
  int max_comp = 0;
  std::string status;
};

std::optional<SolverChoice> solver_for(GraphClass c) {
  switch (c) {
    case GraphClass::Path: return SolverChoice::Path;
    case GraphClass::Cycle: return SolverChoice::Cycle;
    case GraphClass::Tree:
    case GraphClass::Forest: return SolverChoice::Tree;
    case GraphClass::Block: return SolverChoice::Block;
    case GraphClass::Cograph: return SolverChoice::Cograph;
    case GraphClass::Chain: return SolverChoice::Chain;
    case GraphClass::Split: return std::nullopt;
  }
  return std::nullopt;
}

// Per-component length bound the class guarantees, if any.
std::optional<int> component_bound(GraphClass c) {
  if (c == GraphClass::Cograph) return 2;
  if (c == GraphClass::Chain) return 3;
  return std::nullopt;
}

TrialRow run_trial(const FuzzOptions& opt, SolverChoice choice, int trial) {
  Rng rng(splitmix64(opt.seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
  TrialRow row;
  int n = std::uniform_int_distribution<int>(min_order(opt.cls), opt.n)(rng);
  Graph g = relabel(random_graph(opt.cls, n, rng), rng);
  VertexSet s = random_independent_set(g, rng);
  VertexSet t = random_independent_set(g, rng);
  Instance inst = make_instance(std::move(g), std::move(s), std::move(t));
  row.n = n;
  row.m = inst.graph.size();
  try {
    SolveResult r = solve(inst, choice);
    OracleResult o = bfs_distance(inst);
    row.length = r.length;
    row.oracle = o.length;
    row.cc = r.cc_bound;
    for (const auto& part : split_by_components(inst)) {
      if (part.solved) continue;
      row.max_comp = std::max(row.max_comp, solve(part.instance, choice).length);
    }
    if (r.length != o.length) {
      row.status = "mismatch";
    } else if (r.length > r.cc_bound) {
      row.status = "over_bound";
    } else if (auto b = component_bound(opt.cls); b && row.max_comp > *b) {
      row.status = "over_class_bound";
    } else if (r.witness && !validate_sequence(inst, *r.witness).ok) {
      row.status = "bad_witness";
    } else {
      row.status = "ok";
    }
  } catch (const std::exception&) {
    row.status = "error";
  }
  return row;
}

}  // namespace

FuzzSummary run_fuzz(const FuzzOptions& opt, std::ostream& out) {
  auto choice = solver_for(opt.cls);
  if (!choice) throw InvalidInput("no exact solver for class " + class_name(opt.cls));
  if (opt.n < min_order(opt.cls)) throw InvalidInput("--n is below the class minimum");
  if (opt.trials < 0) throw InvalidInput("--trials must be nonnegative");

  std::vector<TrialRow> rows(static_cast<std::size_t>(opt.trials));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < opt.trials; i = next++) rows[i] = run_trial(opt, *choice, i);
  };
  int threads = std::max(1, std::min(opt.threads, opt.trials));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  FuzzSummary sum;
  sum.trials = opt.trials;
  std::map<int, int> gaps;
  out << "c fuzz class=" << class_name(opt.cls) << " n=" << opt.n << " trials=" << opt.trials
      << " seed=" << opt.seed << '\n';
  out << "trial,n,m,length,oracle,cc_bound,gap,max_comp,status\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    int gap = r.cc - r.length;
    out << i << ',' << r.n << ',' << r.m << ',' << r.length << ',' << r.oracle << ',' << r.cc << ',' << gap << ','
        << r.max_comp << ',' << r.status << '\n';
    if (r.status != "ok") ++sum.mismatches;
    ++gaps[gap];
  }
  out << "c mismatches " << sum.mismatches << '\n';
  for (auto [gap, count] : gaps) out << "c gap " << gap << ' ' << count << '\n';
  return sum;
}

}  // namespace symisr

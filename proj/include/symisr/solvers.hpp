#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "symisr/oracle.hpp"
#include "symisr/recognition.hpp"
#include "symisr/reconfig.hpp"

namespace symisr {

struct SolveResult {
  int length = 0;
  std::optional<ReconfigSequence> witness;
  std::string solver_used;
  int cc_bound = 0;
};

// Each class solver throws WrongClass when the graph is outside its class.
SolveResult solve_path_cycle(const Instance& inst);
SolveResult solve_tree(const Instance& inst);   // connected trees, length only
SolveResult solve_block(const Instance& inst);  // connected block graphs, length only
SolveResult solve_cograph(const Instance& inst);
SolveResult solve_chain(const Instance& inst);  // connected chain graphs

enum class SolverChoice { Auto, Path, Cycle, Tree, Block, Cograph, Chain, Oracle };

// Splits into components, routes each unsolved component to its solver
// (path/cycle, tree, block, cograph, chain, else the oracle) and sums the
// lengths. A forced choice applies to every unsolved component. The witness
// is present when every component produced one.
SolveResult solve(const Instance& inst, SolverChoice choice = SolverChoice::Auto,
                  const OracleConfig& cfg = {});

std::optional<SolverChoice> parse_solver_choice(const std::string& name);

constexpr int kInfinity = INT_MAX / 4;

inline int sat_add(int a, int b) { return (a >= kInfinity || b >= kInfinity) ? kInfinity : a + b; }

// f(node, p, q) for p, q in [0, cap]; values above cap are stored as
// kInfinity. The answer is the minimum over the root table.
struct BlockDpTable {
  int cap = 0;
  std::vector<std::vector<int>> f;  // per node, row-major (cap + 1) x (cap + 1)
  int answer = kInfinity;

  int at(int node, int p, int q) const { return f[node][p * (cap + 1) + q]; }
};

BlockDpTable block_dp(const Instance& inst, const BlockTree& tree, int cap);

// h(node, p) with the running minima used by the attach step:
// prefix[p'] = min over p <= p' of h(p) - p, suffix[p'] = min over p >= p' of h(p).
struct TreeDpTable {
  int cap = 0;
  std::vector<std::vector<int>> h;
  std::vector<std::vector<int>> prefix;
  std::vector<std::vector<int>> suffix;
  int answer = kInfinity;
};

TreeDpTable tree_dp(const Instance& inst, const BlockTree& tree, int cap);

}  // namespace symisr

#pragma once

#include <vector>

#include "symisr/oracle.hpp"
#include "symisr/reconfig.hpp"

namespace symisr {

// Literals are signed 1-based variable indices.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

// Throws InvalidInput unless every clause is nonempty with at most three
// literals over distinct in-range variables and every variable occurs in at
// most three clauses.
void validate_formula(const CnfFormula& f);

// Dominating set on g to reconfiguration on a split graph: clique
// X + {z1, z2}, independent Y, source Y + {z1}, target {z2}, budget k + 1.
struct SplitReduction {
  Instance instance;
  int n = 0;
  int k = 0;
  int k_prime = 0;
  std::vector<Vertex> x;               // x[i - 1]
  std::vector<std::vector<Vertex>> y;  // y[i - 1][j - 1], k + 2 per vertex
  Vertex z1 = 0;
  Vertex z2 = 0;
};

// Numbering: x_i = i, y_{i,j} = n + (i - 1)(k + 2) + j, then z1, z2.
SplitReduction reduce_ds(const Graph& g, int k);

struct Occurrence {
  int clause = 0;   // 1-based
  int literal = 0;  // signed variable index
  Vertex a = 0;
  Vertex b = 0;
};

// 3-SAT with bounded occurrences to reconfiguration with budget 2.
struct PlanarReduction {
  Instance instance;
  std::vector<Vertex> y;        // y_0 .. y_n
  std::vector<Vertex> x_true;   // x_{iT}, index i - 1
  std::vector<Vertex> x_false;  // x_{iF}, index i - 1
  std::vector<Vertex> c;        // c_j, index j - 1
  std::vector<Vertex> c_prime;  // c'_j, index j - 1
  std::vector<Occurrence> occurrences;  // clause-major, literal-minor
};

// Numbering: y_0, then x_{iT}, x_{iF}, y_i per variable, then c_j, c'_j per
// clause, then a_ij, b_ij per occurrence.
PlanarReduction reduce_cnf(const CnfFormula& f);

// +1 on z2, -1 on every vertex of Y.
Objective objective_split(const SplitReduction& r);

// Path p_1..p_2t on ids 1..2t with a pendant l_i = 2t + i on p_2i (and the
// edge p_1 p_2t if cyclic); source {p_1, p_3, ...}, target source + L.
Instance gen_remark(int t, bool cyclic);

// Exact subset search; throw InvalidInput above 20 vertices / variables.
int brute_dominating_number(const Graph& g);
bool brute_sat(const CnfFormula& f);

}  // namespace symisr

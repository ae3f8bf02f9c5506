#include "symisr/reductions.hpp"

#include <bit>
#include <cstdlib>
#include <set>

namespace symisr {

namespace {

constexpr int kBruteLimit = 20;

}  // namespace

void validate_formula(const CnfFormula& f) {
  if (f.num_vars < 0) throw InvalidInput("negative variable count");
  std::vector<int> uses(static_cast<std::size_t>(f.num_vars) + 1, 0);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& clause = f.clauses[j];
    std::string where = "clause " + std::to_string(j + 1);
    if (clause.empty()) throw InvalidInput(where + " is empty");
    if (clause.size() > 3) throw InvalidInput(where + " has more than three literals");
    std::set<int> seen;
    for (int lit : clause) {
      int var = std::abs(lit);
      if (lit == 0 || var > f.num_vars) throw InvalidInput(where + " has literal " + std::to_string(lit) + " out of range");
      if (!seen.insert(var).second) throw InvalidInput(where + " repeats variable " + std::to_string(var));
      if (++uses[var] > 3) throw InvalidInput("variable " + std::to_string(var) + " occurs in more than three clauses");
    }
  }
}

SplitReduction reduce_ds(const Graph& g, int k) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  const int n = g.order();
  SplitReduction r{Instance{g, {}, {}, std::nullopt}, n, k, k + 1, {}, {}, 0, 0};
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    r.x.push_back(i);
    std::vector<Vertex> yi;
    for (int j = 1; j <= k + 2; ++j) yi.push_back(n + (i - 1) * (k + 2) + j);
    r.y.push_back(std::move(yi));
  }
  r.z1 = n + n * (k + 2) + 1;
  r.z2 = r.z1 + 1;
  std::vector<Vertex> clique = r.x;
  clique.push_back(r.z1);
  clique.push_back(r.z2);
  for (std::size_t a = 0; a < clique.size(); ++a) {
    for (std::size_t b = a + 1; b < clique.size(); ++b) edges.emplace_back(clique[a], clique[b]);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && !g.has_edge(i, j)) continue;
      for (Vertex y : r.y[j - 1]) edges.emplace_back(r.x[i - 1], y);
    }
  }
  std::vector<Vertex> source;
  for (const auto& yi : r.y) source.insert(source.end(), yi.begin(), yi.end());
  source.push_back(r.z1);
  r.instance = make_instance(Graph::build(r.z2, edges), VertexSet(source), VertexSet{r.z2}, k + 1);
  return r;
}

PlanarReduction reduce_cnf(const CnfFormula& f) {
  validate_formula(f);
  PlanarReduction r{Instance{Graph::build(1, {}), {}, {}, std::nullopt}, {}, {}, {}, {}, {}, {}};
  Vertex next = 0;
  std::vector<Edge> edges;
  r.y.push_back(++next);
  for (int i = 1; i <= f.num_vars; ++i) {
    Vertex xt = ++next, xf = ++next, yi = ++next;
    Vertex prev = r.y.back();
    edges.insert(edges.end(), {{prev, xt}, {prev, xf}, {xt, yi}, {xf, yi}, {xt, xf}});
    r.x_true.push_back(xt);
    r.x_false.push_back(xf);
    r.y.push_back(yi);
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    Vertex c = ++next, cp = ++next;
    edges.emplace_back(c, cp);
    r.c.push_back(c);
    r.c_prime.push_back(cp);
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    for (int lit : f.clauses[j]) {
      Vertex a = ++next, b = ++next;
      int var = std::abs(lit);
      Vertex x = lit > 0 ? r.x_true[var - 1] : r.x_false[var - 1];
      edges.insert(edges.end(), {{x, a}, {a, b}, {b, r.c[j]}});
      r.occurrences.push_back({static_cast<int>(j) + 1, lit, a, b});
    }
  }
  std::vector<Vertex> common(r.y.begin(), r.y.end());
  for (const auto& occ : r.occurrences) common.push_back(occ.a);
  std::vector<Vertex> source = common, target = common;
  source.insert(source.end(), r.c_prime.begin(), r.c_prime.end());
  target.insert(target.end(), r.c.begin(), r.c.end());
  r.instance = make_instance(Graph::build(next, edges), VertexSet(source), VertexSet(target), 2);
  return r;
}

Objective objective_split(const SplitReduction& r) {
  Objective obj;
  obj.coeff.assign(static_cast<std::size_t>(r.instance.graph.order()) + 1, Rational(0));
  obj.coeff[r.z2] = 1;
  for (const auto& yi : r.y) {
    for (Vertex v : yi) obj.coeff[v] = -1;
  }
  return obj;
}

Instance gen_remark(int t, bool cyclic) {
  if (t < 1) throw InvalidInput("t must be at least 1");
  std::vector<Edge> edges;
  for (int i = 1; i < 2 * t; ++i) edges.emplace_back(i, i + 1);
  if (cyclic && 2 * t >= 3) edges.emplace_back(1, 2 * t);
  std::vector<Vertex> source, target;
  for (int i = 1; i <= t; ++i) {
    edges.emplace_back(2 * i, 2 * t + i);
    source.push_back(2 * i - 1);
    target.push_back(2 * i - 1);
    target.push_back(2 * t + i);
  }
  return make_instance(Graph::build(3 * t, edges), VertexSet(source), VertexSet(target));
}

int brute_dominating_number(const Graph& g) {
  const int n = g.order();
  if (n > kBruteLimit) throw InvalidInput("dominating set search limited to 20 vertices");
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) {
    closed[v - 1] = 1u << (v - 1);
    for (Vertex w : g.neighbors(v)) closed[v - 1] |= 1u << (w - 1);
  }
  const std::uint32_t all = (1u << n) - 1;
  int best = n;
  for (std::uint32_t d = 0; d <= all; ++d) {
    int size = std::popcount(d);
    if (size >= best) continue;
    std::uint32_t covered = 0;
    for (std::uint32_t rest = d; rest; rest &= rest - 1) covered |= closed[std::countr_zero(rest)];
    if (covered == all) best = size;
  }
  return best;
}

bool brute_sat(const CnfFormula& f) {
  if (f.num_vars > kBruteLimit) throw InvalidInput("satisfiability search limited to 20 variables");
  for (std::uint32_t assign = 0; assign < (1u << f.num_vars); ++assign) {
    bool ok = true;
    for (const auto& clause : f.clauses) {
      bool sat = false;
      for (int lit : clause) {
        bool value = (assign >> (std::abs(lit) - 1)) & 1u;
        if ((lit > 0) == value) sat = true;
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace symisr

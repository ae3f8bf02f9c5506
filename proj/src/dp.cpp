#include <algorithm>
#include <stdexcept>

#include "symisr/solvers.hpp"

namespace symisr {

namespace {

bool membership_changes(const Instance& inst, Vertex v) {
  return inst.source.contains(v) != inst.target.contains(v);
}

int count_in(const VertexSet& s, const VertexSet& clique) {
  return static_cast<int>(set_intersection(s, clique).size());
}

int capped(int value, int cap) { return value > cap ? kInfinity : value; }

}  // namespace

BlockDpTable block_dp(const Instance& inst, const BlockTree& tree, int cap) {
  if (cap < 0) throw InvalidInput("table cap must be nonnegative");
  BlockDpTable t;
  t.cap = cap;
  const int w = cap + 1;
  t.f.assign(tree.nodes.size(), std::vector<int>(static_cast<std::size_t>(w) * w, kInfinity));

  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const BlockNode& node = tree.nodes[i];
    auto& f = t.f[i];
    auto put = [&](int p, int q, int value) {
      int& slot = f[p * w + q];
      slot = std::min(slot, capped(value, cap));
    };

    if (node.kind == BlockNodeKind::Leaf) {
      bool odd_needed = membership_changes(inst, node.root);
      for (int p = 0; p <= cap; ++p) {
        if ((p % 2 == 1) == odd_needed) put(p, p, p);
      }
      continue;
    }

    const auto& f1 = t.f[node.left];
    const auto& f2 = t.f[node.right];
    auto row_min = [&](const std::vector<int>& table, int p) {
      return *std::min_element(table.begin() + p * w, table.begin() + (p + 1) * w);
    };

    if (node.kind == BlockNodeKind::Merge) {
      for (int p = 0; p <= cap; ++p) {
        int m1 = row_min(f1, p), m2 = row_min(f2, p);
        if (m1 < kInfinity && m2 < kInfinity) put(p, p, m1 + m2 - p);
      }
      continue;
    }

    const int a = count_in(inst.source, tree.nodes[node.left].root_clique);
    const int b = inst.source.contains(tree.nodes[node.right].root) ? 1 : 0;
    const int c = a + b;
    std::vector<int> fstar(static_cast<std::size_t>(w));
    for (int p2 = 0; p2 <= cap; ++p2) fstar[p2] = row_min(f2, p2);

    for (int p = 0; p <= cap; ++p) {
      for (int q1 = 0; q1 <= cap; ++q1) {
        int v1 = f1[p * w + q1];
        if (v1 >= kInfinity) continue;
        for (int p2 = 0; p2 <= cap; ++p2) {
          int v2 = fstar[p2];
          if (v2 >= kInfinity) continue;
          int s_lo = 0, s_hi;
          if (q1 > p2) {
            if (b == 1 && p2 == 0) continue;
            s_hi = p2;
          } else if (q1 < p2) {
            if (a == 1 && q1 == 0) continue;
            s_hi = q1;
          } else if (c == 1) {
            s_hi = q1;
          } else if (q1 == 0) {
            s_hi = 0;
          } else {
            s_hi = q1 - 1;
          }
          for (int s = s_lo; s <= s_hi; ++s) {
            int q = q1 + p2 - 2 * s;
            if (q <= cap) put(p, q, v1 + v2 - s);
          }
        }
      }
    }
  }

  const auto& root = t.f[tree.root()];
  t.answer = *std::min_element(root.begin(), root.end());
  return t;
}

TreeDpTable tree_dp(const Instance& inst, const BlockTree& tree, int cap) {
  if (cap < 0) throw InvalidInput("table cap must be nonnegative");
  TreeDpTable t;
  t.cap = cap;
  const std::size_t w = static_cast<std::size_t>(cap) + 1;
  t.h.assign(tree.nodes.size(), std::vector<int>(w, kInfinity));
  t.prefix = t.h;
  t.suffix = t.h;

  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const BlockNode& node = tree.nodes[i];
    auto& h = t.h[i];

    if (node.kind == BlockNodeKind::Leaf) {
      bool odd_needed = membership_changes(inst, node.root);
      for (int p = 0; p <= cap; ++p) {
        if ((p % 2 == 1) == odd_needed) h[p] = p;
      }
    } else if (node.kind == BlockNodeKind::Merge) {
      const auto& h1 = t.h[node.left];
      const auto& h2 = t.h[node.right];
      for (int p = 0; p <= cap; ++p) {
        if (h1[p] < kInfinity && h2[p] < kInfinity) h[p] = capped(h1[p] + h2[p] - p, cap);
      }
    } else {
      if (tree.nodes[node.left].root_clique.size() != 1) {
        throw WrongClass("attach onto a clique of size > 1: graph is not a tree");
      }
      const auto& h1 = t.h[node.left];
      const auto& h2 = t.h[node.right];
      const auto& pre2 = t.prefix[node.right];
      const auto& suf2 = t.suffix[node.right];
      const bool r1_in = inst.source.contains(tree.nodes[node.left].root);
      const bool r2_in = inst.source.contains(tree.nodes[node.right].root);
      const int c = count_in(inst.source, node.root_clique);

      // Running minimum of h2(p2) - p2 over p2 >= 1, for the case where the
      // attached root starts inside the set and must flip at least once.
      std::vector<int> pre2_from1(w, kInfinity);
      for (int p2 = 1; p2 <= cap; ++p2) {
        int v = h2[p2] < kInfinity ? h2[p2] - p2 : kInfinity;
        pre2_from1[p2] = std::min(p2 > 1 ? pre2_from1[p2 - 1] : kInfinity, v);
      }

      for (int p = 0; p <= cap; ++p) {
        int best = kInfinity;
        if (h1[p] < kInfinity && p >= 1) {
          int m = r2_in ? pre2_from1[p - 1] : pre2[p - 1];
          best = std::min(best, sat_add(h1[p], m));
        }
        if (p == 0 && r1_in) {
          best = std::min(best, sat_add(h1[0], h2[0]));
        } else if (h1[p] < kInfinity && p + 1 <= cap && suf2[p + 1] < kInfinity) {
          best = std::min(best, h1[p] + suf2[p + 1] - p);
        }
        if (c == 0 && p == 0) {
          best = std::min(best, sat_add(h1[0], h2[0]));
        } else if (h1[p] < kInfinity && h2[p] < kInfinity) {
          best = std::min(best, h1[p] + h2[p] - p + (c == 1 ? 0 : 1));
        }
        h[p] = capped(best, cap);
      }
    }

    auto& pre = t.prefix[i];
    auto& suf = t.suffix[i];
    for (int p = 0; p <= cap; ++p) {
      int v = h[p] < kInfinity ? h[p] - p : kInfinity;
      pre[p] = std::min(p > 0 ? pre[p - 1] : kInfinity, v);
    }
    for (int p = cap; p >= 0; --p) suf[p] = std::min(p < cap ? suf[p + 1] : kInfinity, h[p]);
  }

  const auto& root = t.h[tree.root()];
  t.answer = *std::min_element(root.begin(), root.end());
  return t;
}

}  // namespace symisr

#include "gpf/enumeration.hpp"

#include <algorithm>
#include <set>

namespace gpf {

namespace {

// Assigns an out-edge to vertices 1..n in order; parent_head[] holds the
// heads chosen so far. A cycle closes exactly when its last edge is
// assigned, and at that moment every other vertex on it already has a
// parent, so walking assigned parents from the new head detects it.
void extend_tree(const Multigraph& g, VertexId v, std::vector<EdgeRef>& chosen,
                 std::vector<VertexId>& parent_head, std::vector<RootedTree>& out) {
  const int n = g.non_root_count();
  if (v > n) {
    out.emplace_back(g.vertex_count(), chosen);
    return;
  }
  for (const EdgeRef& e : g.out_edges(v)) {
    VertexId cur = e.head;
    bool cycle = false;
    while (cur != 0) {
      if (cur == v) {
        cycle = true;
        break;
      }
      if (parent_head[cur] < 0) break;  // chain not yet complete, no cycle
      cur = parent_head[cur];
    }
    if (cycle) continue;
    chosen.push_back(e);
    parent_head[v] = e.head;
    extend_tree(g, v + 1, chosen, parent_head, out);
    parent_head[v] = -1;
    chosen.pop_back();
  }
}

}  // namespace

std::vector<RootedTree> enumerate_spanning_trees(const Multigraph& g) {
  const int n = g.non_root_count();
  std::vector<RootedTree> result;
  if (n == 0) {
    result.emplace_back(1);
    return result;
  }
  std::vector<EdgeRef> chosen;
  chosen.reserve(n);
  std::vector<VertexId> parent_head(g.vertex_count(), -1);
  extend_tree(g, 1, chosen, parent_head, result);
  return result;
}

BigInt count_spanning_trees(const Multigraph& g) {
  const int n = g.non_root_count();
  if (n == 0) return 1;

  // Reduced Laplacian over non-root vertices: L_jj = out-degree d_j,
  // L_ji = -m(j,i) for i != j.
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      a[j - 1][i - 1] = (i == j) ? BigInt(g.out_degree(j)) : BigInt(-g.multiplicity(j, i));
    }
  }

  // Bareiss fraction-free elimination: every division is exact.
  BigInt prev_pivot = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev_pivot;
      }
      a[r][k] = 0;
    }
    prev_pivot = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void for_each_subtree(const Multigraph& g, int max_size,
                      const std::function<void(const RootedTree&)>& visit) {
  if (max_size < 1) return;

  // Grow breadth-wise by size; a set keyed by the parent-edge map dedups
  // subtrees reachable through different attachment orders.
  std::set<RootedTree> current;
  current.insert(RootedTree(g.vertex_count()));
  for (const RootedTree& t : current) visit(t);

  for (int size = 2; size <= max_size; ++size) {
    std::set<RootedTree> next;
    for (const RootedTree& t : current) {
      for (VertexId v = 1; v < g.vertex_count(); ++v) {
        if (t.contains(v)) continue;
        for (const EdgeRef& e : g.out_edges(v)) {
          if (!t.contains(e.head)) continue;
          RootedTree grown = t;
          grown.attach(e);
          next.insert(grown);
        }
      }
    }
    for (const RootedTree& t : next) visit(t);
    current = std::move(next);
    if (current.empty()) break;
  }
}

std::vector<RootedTree> enumerate_subtrees(const Multigraph& g, int max_size) {
  std::vector<RootedTree> result;
  for_each_subtree(g, max_size, [&](const RootedTree& t) { result.push_back(t); });
  return result;
}

}  // namespace gpf

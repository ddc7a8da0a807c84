#include "gpf/bijection.hpp"

#include <algorithm>

#include "gpf/enumeration.hpp"

namespace gpf {

namespace {

std::vector<int> rank_of(const Multigraph& g, const RootedTree& t, const OrderPolicy& p) {
  std::vector<int> rank(g.vertex_count(), -1);
  std::vector<VertexId> order = compute_order(g, t, p);
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  return rank;
}

// Edges out of v whose head lies in the ranked set, sorted by the induced
// order: head position first, copy index among parallel edges second.
std::vector<EdgeRef> edges_into_ordered(const Multigraph& g, VertexId v,
                                        const std::vector<int>& rank) {
  std::vector<EdgeRef> edges;
  for (const EdgeRef& e : g.out_edges(v)) {
    if (rank[e.head] >= 0) edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end(), [&](const EdgeRef& a, const EdgeRef& b) {
    if (rank[a.head] != rank[b.head]) return rank[a.head] < rank[b.head];
    return a.copy < b.copy;
  });
  return edges;
}

}  // namespace

ParkingCandidate theta(const Multigraph& g, const RootedTree& tree, const OrderPolicy& p) {
  if (!tree.spans() || !tree.valid_in(g)) {
    throw std::invalid_argument("theta needs a spanning tree of the graph");
  }
  std::vector<int> rank = rank_of(g, tree, p);

  const int n = g.non_root_count();
  ParkingCandidate b(n, 0);
  for (VertexId j = 1; j <= n; ++j) {
    const EdgeRef& tree_edge = tree.parent_edge(j);
    auto key = [&](const EdgeRef& e) { return std::pair(rank[e.head], e.copy); };
    int below = 0;
    for (const EdgeRef& e : g.out_edges(j)) {
      if (key(e) < key(tree_edge)) ++below;
    }
    b[j - 1] = below;
  }
  return b;
}

PhiResult phi(const Multigraph& g, const ParkingCandidate& b, const OrderPolicy& p) {
  const int n = g.non_root_count();
  if (static_cast<int>(b.size()) != n) {
    throw std::invalid_argument("candidate length must equal the non-root vertex count");
  }

  PhiResult result;
  result.tree = RootedTree(g.vertex_count());

  for (int m = 1; m <= n; ++m) {
    PhiStep step;
    step.step = m;
    for (VertexId v = 1; v <= n; ++v) {
      if (!result.tree.contains(v)) step.unreached.push_back(v);
    }

    std::vector<int> rank = rank_of(g, result.tree, p);
    for (VertexId j : step.unreached) {
      std::vector<EdgeRef> into = edges_into_ordered(g, j, rank);
      if (static_cast<int>(into.size()) >= b[j - 1] + 1) {
        step.eligible.push_back(j);
        step.candidate_edges.push_back(into[b[j - 1]]);
      }
    }

    if (step.eligible.empty()) {
      result.failed_step = m;
      result.stuck = step.unreached;
      result.trace.steps.push_back(std::move(step));
      return result;
    }

    // Tentatively attach every eligible vertex, then keep only the one the
    // policy puts first.
    RootedTree tentative = result.tree;
    for (const EdgeRef& e : step.candidate_edges) tentative.attach(e);
    std::vector<int> tentative_rank = rank_of(g, tentative, p);
    step.chosen = *std::min_element(
        step.eligible.begin(), step.eligible.end(),
        [&](VertexId a, VertexId c) { return tentative_rank[a] < tentative_rank[c]; });
    step.chosen_edge = step.candidate_edges[static_cast<size_t>(
        std::find(step.eligible.begin(), step.eligible.end(), step.chosen) -
        step.eligible.begin())];

    result.tree.attach(step.chosen_edge);
    result.trace.steps.push_back(std::move(step));
  }

  result.success = true;
  return result;
}

BijectionReport verify_bijection(const Multigraph& g, const OrderPolicy& p) {
  BijectionReport report;
  try {
    std::vector<ParkingCandidate> pfs = enumerate_parking_functions(g);
    std::vector<RootedTree> trees = enumerate_spanning_trees(g);
    report.parking_functions = static_cast<int>(pfs.size());
    report.spanning_trees = static_cast<int>(trees.size());

    for (const ParkingCandidate& b : pfs) {
      PhiResult r = phi(g, b, p);
      if (!r.success || theta(g, r.tree, p) != b) {
        ++report.theta_phi_failures;
        if (report.failure_details.size() < 10) {
          report.failure_details.push_back("theta(phi(b)) != b for b = " + format_parking(b));
        }
        continue;
      }
      // The attachment sequence must be ascending in the final tree order.
      std::vector<int> rank = rank_of(g, r.tree, p);
      int previous = -1;
      for (const PhiStep& step : r.trace.steps) {
        if (rank[step.chosen] <= previous) {
          ++report.trace_order_failures;
          if (report.failure_details.size() < 10) {
            report.failure_details.push_back(
                "attachment order not ascending for b = " + format_parking(b));
          }
          break;
        }
        previous = rank[step.chosen];
      }
    }

    for (const RootedTree& t : trees) {
      ParkingCandidate b = theta(g, t, p);
      PhiResult r = phi(g, b, p);
      if (!r.success || r.tree != t) {
        ++report.phi_theta_failures;
        if (report.failure_details.size() < 10) {
          report.failure_details.push_back("phi(theta(T)) != T for T = " + serialize_tree(t));
        }
      }
    }
  } catch (const PolicyError& e) {
    report.policy_error = e.what();
  }
  return report;
}

}  // namespace gpf

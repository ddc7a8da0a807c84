#ifndef GPF_BIJECTION_HPP
#define GPF_BIJECTION_HPP

#include <string>
#include <vector>

#include "gpf/multigraph.hpp"
#include "gpf/parking.hpp"
#include "gpf/rooted_tree.hpp"
#include "gpf/tree_order.hpp"

namespace gpf {

/// One step of the tree-growing construction: `unreached` is the set of
/// vertices outside the tree so far, `eligible` the ones with enough edges
/// into it, `candidate_edges[k]` the selected edge of eligible[k], and
/// `chosen` the vertex actually attached.
struct PhiStep {
  int step = 0;
  std::vector<VertexId> unreached;
  std::vector<VertexId> eligible;
  std::vector<EdgeRef> candidate_edges;
  VertexId chosen = -1;
  EdgeRef chosen_edge;
};

struct PhiTrace {
  std::vector<PhiStep> steps;
};

/// Outcome of the inverse map. On failure the partial tree and the stuck
/// vertex set ("not a parking function" witness) are preserved, so the map
/// doubles as a membership test.
struct PhiResult {
  bool success = false;
  RootedTree tree;
  PhiTrace trace;
  int failed_step = -1;
  std::vector<VertexId> stuck;

  explicit operator bool() const { return success; }
};

/// Tree-to-values map: entry j counts the out-edges of j that come before
/// j's tree edge in the order induced on edges by the tree order (heads
/// compared by position, parallel copies by copy index). T must span g.
ParkingCandidate theta(const Multigraph& g, const RootedTree& tree, const OrderPolicy& p);

/// Values-to-tree map, built one vertex per step: a vertex is eligible
/// when it has at least b_j + 1 edges into the current tree; its candidate
/// edge is the (b_j + 1)-th smallest of those; the vertex attached is the
/// eligible one that the policy orders first after tentatively attaching
/// all of them. Fails at step m iff no vertex is eligible.
PhiResult phi(const Multigraph& g, const ParkingCandidate& b, const OrderPolicy& p);

/// Exhaustive round-trip check on one graph and policy.
struct BijectionReport {
  int parking_functions = 0;
  int spanning_trees = 0;
  int theta_phi_failures = 0;   // theta(phi(b)) != b
  int phi_theta_failures = 0;   // phi(theta(T)) != T
  int trace_order_failures = 0; // attachment sequence not ascending
  std::string policy_error;     // non-empty when the policy itself failed
  std::vector<std::string> failure_details;

  bool passed() const {
    return policy_error.empty() && theta_phi_failures == 0 && phi_theta_failures == 0 &&
           trace_order_failures == 0 && parking_functions == spanning_trees;
  }
};

/// Runs theta∘phi over every parking function, phi∘theta over every
/// spanning tree, and checks that each phi trace attaches vertices in
/// ascending final-tree order.
BijectionReport verify_bijection(const Multigraph& g, const OrderPolicy& p);

}  // namespace gpf

#endif  // GPF_BIJECTION_HPP

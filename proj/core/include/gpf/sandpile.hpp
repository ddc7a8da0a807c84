#ifndef GPF_SANDPILE_HPP
#define GPF_SANDPILE_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpf/multigraph.hpp"
#include "gpf/parking.hpp"
#include "gpf/rooted_tree.hpp"

namespace gpf {

/// Chip counts (u_1,...,u_n) on the non-root vertices.
using SandpileConfig = std::vector<int>;

/// u_i = d_i - b_i. The config is allowed iff b is a parking function.
SandpileConfig to_allowed_config(const Multigraph& g, const ParkingCandidate& b);

/// Inverse of to_allowed_config: b_i = d_i - u_i.
ParkingCandidate from_allowed_config(const Multigraph& g, const SandpileConfig& u);

/// For a symmetric graph and a parking function, grows the tree with the
/// breadth-first policy and compares its height level sets against the
/// burning waves; they must agree index by index. Throws
/// std::invalid_argument for non-symmetric graphs or non-parking inputs.
bool burning_waves_match_heights(const Multigraph& g, const ParkingCandidate& b);

/// Total order on the undirected edges {i,j} of a symmetric graph.
class UndirectedEdgeOrder {
 public:
  UndirectedEdgeOrder() = default;

  /// Ranks pairs {i,j} with i<j lexicographically: {0,1} < {0,2} < {1,2}...
  static UndirectedEdgeOrder lex(const Multigraph& g);

  /// The lex order reversed.
  static UndirectedEdgeOrder reverse_lex(const Multigraph& g);

  void set_rank(VertexId a, VertexId b, int rank);
  int rank(VertexId a, VertexId b) const;
  bool covers(VertexId a, VertexId b) const;
  size_t size() const { return rank_.size(); }

 private:
  std::map<std::pair<VertexId, VertexId>, int> rank_;  // key normalized a < b
};

/// Parses an edge-order file: one `rank I J` line per undirected edge, in
/// ascending rank order. Every adjacent pair must appear exactly once.
/// Throws ParseError on duplicates, gaps, or non-adjacent pairs.
UndirectedEdgeOrder parse_edge_order(const Multigraph& g, std::string_view text);

/// Number of non-tree undirected edges that are the minimum of the unique
/// cycle they close with the spanning tree. Requires a symmetric graph
/// without parallel edges, a spanning tree, and an order covering every
/// adjacent pair.
int external_activity(const Multigraph& g, const RootedTree& tree,
                      const UndirectedEdgeOrder& order);

/// Path grown from the root by always leaving the current endpoint along
/// its minimum-rank edge to an unused vertex. Throws std::invalid_argument
/// when no extension exists before all vertices are used.
RootedTree greedy_min_path(const Multigraph& g, const UndirectedEdgeOrder& order);

/// Evidence that the tree-order bijections differ from activity-based
/// ones on K_{n+1}: (a) every Hamiltonian-path tree maps to a permutation
/// of 0..n-1 under every built-in policy, while (b) external activity
/// separates the greedy minimum path from some other Hamiltonian path.
struct SeparationReport {
  int hamiltonian_paths = 0;
  bool all_theta_permutations = false;
  int greedy_activity = -1;
  int witness_activity = -1;  // activity of a path avoiding the min edge
  std::string witness_path;   // tree serialization of that path
  std::vector<std::string> failures;

  bool separated() const {
    return all_theta_permutations && greedy_activity == 0 && witness_activity >= 1;
  }
};

SeparationReport separation_experiment(int n);

}  // namespace gpf

#endif  // GPF_SANDPILE_HPP

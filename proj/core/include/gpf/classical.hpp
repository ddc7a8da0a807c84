#ifndef GPF_CLASSICAL_HPP
#define GPF_CLASSICAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpf/parking.hpp"
#include "gpf/rooted_tree.hpp"

namespace gpf {

/// Result of the linear parking-lot simulation: drivers 1..n, spots
/// 0..n-1, each driver takes its favorite spot or the next free one.
struct ParkOutcome {
  bool success = false;
  std::vector<int> spot_of_driver;        // index driver-1, valid on success
  std::optional<int> failing_driver;
};

ParkOutcome park_simulate(const ParkingCandidate& b);

/// Lattice path in the n x n square: n east steps labeled by a permutation
/// of 1..n and n north steps. Labels within one east-run increase. Row i of
/// the square holds the drivers whose favorite spot is i.
struct LabeledDyckPath {
  struct Step {
    bool east = false;
    int label = 0;  // meaningful for east steps only

    friend bool operator==(const Step&, const Step&) = default;
  };

  int n = 0;
  std::vector<Step> steps;

  friend bool operator==(const LabeledDyckPath&, const LabeledDyckPath&) = default;
};

/// Tree on K_{n+1} read off the parking simulation: the parent of i is the
/// driver parked in spot b_i - 1, or the root when b_i = 0. Throws
/// std::invalid_argument when b is not a parking function.
RootedTree tree_from_spot_rule(const ParkingCandidate& b);

/// Encodes a parking function as east-runs per favorite spot, one north
/// step after each row. The resulting path stays weakly above the diagonal
/// exactly when b is a parking function; otherwise this throws
/// std::invalid_argument.
LabeledDyckPath parking_to_dyck(const ParkingCandidate& b);

/// Replays the path against a growing tree on K_{n+1}: each east step
/// labeled i attaches i to the current vertex; each north step advances
/// the current vertex to its successor in the right-to-left depth-first
/// order of the tree built so far. Throws std::invalid_argument when a
/// north step has no successor to advance to (malformed path).
RootedTree tree_from_dyck(const LabeledDyckPath& d);

/// Text form: space-separated `E(label)` and `N` tokens.
std::string format_dyck(const LabeledDyckPath& d);

/// Parses the text form and validates the path invariants (step counts,
/// label permutation, diagonal, increasing runs). Throws ParseError.
LabeledDyckPath parse_dyck(std::string_view text);

}  // namespace gpf

#endif  // GPF_CLASSICAL_HPP

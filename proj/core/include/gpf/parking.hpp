#ifndef GPF_PARKING_HPP
#define GPF_PARKING_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gpf/multigraph.hpp"

namespace gpf {

/// Candidate values (b_1,...,b_n), entry j-1 belonging to vertex j.
using ParkingCandidate = std::vector<int>;

/// Result of the subset-based parking test. When the candidate fails,
/// `witness` is the maximal violating subset U: every j in U has at most
/// b_j edges leaving U. (Violating subsets are closed under union, so the
/// maximal one is well defined; it coincides with the stuck set of the
/// burning algorithm.)
struct DefinitionalReport {
  bool is_parking = false;
  std::vector<VertexId> witness;
};

/// Outcome of the burning algorithm. waves[0] = {0}; waves[i] holds the
/// vertices marked at iteration i. `stuck` is empty iff accepted.
struct BurnReport {
  bool accepted = false;
  std::vector<std::vector<VertexId>> waves;
  std::vector<VertexId> stuck;
};

/// Checks the subset definition directly: for every non-empty U inside
/// {1..n} some j in U must have more than b_j edges from j to the
/// complement of U. Exponential in n; meant for small graphs.
DefinitionalReport is_parking_definitional(const Multigraph& g, const ParkingCandidate& b);

/// Dhar-style marking: starting from {0}, repeatedly mark every unmarked v
/// with more edges into the marked set than b_v, one wave per iteration.
BurnReport is_parking_burning(const Multigraph& g, const ParkingCandidate& b);

/// All parking functions of g, in lexicographic order. Searches the box
/// 0 <= b_j <= d_j - 1 (a singleton U = {j} forces b_j < d_j).
std::vector<ParkingCandidate> enumerate_parking_functions(const Multigraph& g);

/// Parses whitespace-separated values b_1 ... b_n. Throws ParseError on
/// junk or negative entries.
ParkingCandidate parse_parking(std::string_view text);

std::string format_parking(const ParkingCandidate& b);

}  // namespace gpf

#endif  // GPF_PARKING_HPP

#ifndef GPF_ENUMERATION_HPP
#define GPF_ENUMERATION_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <vector>

#include "gpf/multigraph.hpp"
#include "gpf/rooted_tree.hpp"

namespace gpf {

/// Exact arbitrary-precision integer for tree counts.
using BigInt = boost::multiprecision::cpp_int;

/// All spanning trees of g rooted at 0: every assignment of one out-edge
/// per non-root vertex whose functional graph is acyclic toward 0.
/// Parallel copies yield distinct trees. Backtracking; meant for small n.
std::vector<RootedTree> enumerate_spanning_trees(const Multigraph& g);

/// Number of spanning trees rooted at 0 via the Matrix-Tree theorem:
/// determinant of the reduced out-degree Laplacian (root row/column
/// deleted), evaluated exactly with fraction-free Bareiss elimination.
BigInt count_spanning_trees(const Multigraph& g);

/// Visits every subtree of g rooted at 0 with at most max_size vertices,
/// each exactly once, starting with the singleton {0}. Subtrees are visited
/// in ascending (size, parent-edge map) order.
void for_each_subtree(const Multigraph& g, int max_size,
                      const std::function<void(const RootedTree&)>& visit);

/// Collects for_each_subtree into a vector.
std::vector<RootedTree> enumerate_subtrees(const Multigraph& g, int max_size);

}  // namespace gpf

#endif  // GPF_ENUMERATION_HPP

#ifndef GPF_TREE_ORDER_HPP
#define GPF_TREE_ORDER_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpf/multigraph.hpp"
#include "gpf/rooted_tree.hpp"

namespace gpf {

/// A policy that cannot produce a total order, or a table with no entry
/// for the requested tree.
class PolicyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Partial-order comparison result. `incomparable` can only occur for
/// free-standing path pairs; two paths of the same tree always compare.
enum class Ordering { less, greater, equal, incomparable };

Ordering flip(Ordering o);

/// Built-in comparators on root-anchored paths. All of them place a proper
/// prefix below its extensions:
///  - lex: vertex sequences compared lexicographically.
///  - length_then_endpoint: shorter first, ties by final vertex.
///  - max_of_difference: the path whose vertex-set difference has the
///    smaller maximum comes first (max of the empty set is -1).
///  - increasing_rearrangement_lex: sorted vertex sets compared from the
///    largest element down (colex).
///  - sum_then_endpoint: smaller vertex sum first, ties by final vertex.
///  - edge_label_lex: sequences of global edge numbers compared
///    lexicographically (total on distinct paths).
enum class PathComparator {
  lex,
  length_then_endpoint,
  max_of_difference,
  increasing_rearrangement_lex,
  sum_then_endpoint,
  edge_label_lex,
};

/// Compares two paths of g. Distinct paths whose comparison keys tie are
/// incomparable; `equal` is returned only for identical paths.
Ordering compare_paths(const Multigraph& g, const TreePath& a, const TreePath& b,
                       PathComparator c);

/// True iff the intersection of the two paths (as subgraphs) is itself a
/// root-anchored path: either the paths share exactly a common prefix, or
/// they share no vertex besides the root. Paths of one tree always
/// intersect in this sense.
bool paths_intersect(const TreePath& a, const TreePath& b);

/// Explicit per-tree orders, keyed by serialize_tree(t).
using TableOrders = std::map<std::string, std::vector<VertexId>>;

/// A strategy producing a total order on the vertices of any subtree:
///  - bf: by height, ties by label.
///  - df: preorder depth-first search, children in ascending label order.
///  - df_rtl: depth-first with descending label order among children.
///  - va: repeatedly add the smallest vertex with a tree edge into the
///    part already ordered.
///  - path(c): vertices sorted by comparing their root paths with c.
///  - table(t): orders looked up verbatim; a missing tree is an error.
class OrderPolicy {
 public:
  enum class Kind { bf, df, df_rtl, va, path, table };

  static OrderPolicy bf();
  static OrderPolicy df();
  static OrderPolicy df_rtl();
  static OrderPolicy va();
  static OrderPolicy path(PathComparator c);
  static OrderPolicy table(TableOrders orders);

  /// Parses a policy name: bf, df, df-rtl, va, path:lex, path:bf, path:va,
  /// path:incr, path:sum, path:edgelex. Table policies are built from a
  /// parsed TableOrders instead. Returns nullopt for unknown names.
  static std::optional<OrderPolicy> parse(std::string_view name);

  /// The ten parseable policies, in CLI listing order.
  static std::vector<OrderPolicy> builtins();

  Kind kind() const { return kind_; }
  PathComparator comparator() const { return comparator_; }
  const TableOrders& orders() const { return *orders_; }
  std::string name() const;

 private:
  OrderPolicy(Kind kind, PathComparator c) : kind_(kind), comparator_(c) {}

  Kind kind_;
  PathComparator comparator_ = PathComparator::lex;
  std::shared_ptr<const TableOrders> orders_;
};

/// The vertices of t listed ascending in the policy's order; always a
/// permutation of t's members starting with the root.
std::vector<VertexId> compute_order(const Multigraph& g, const RootedTree& t,
                                    const OrderPolicy& p);

/// Outcome of checking a policy on every subtree of g up to a size cap:
/// children must come after their parents, and removing a leaf must not
/// reorder the remaining vertices.
struct ProperSetReport {
  bool valid = false;
  int subtrees_checked = 0;
  std::string violation;  // empty when valid

  explicit operator bool() const { return valid; }
};

ProperSetReport validate_proper_set(const Multigraph& g, const OrderPolicy& p,
                                    int max_subtree_size);

/// Result of the necessary-condition test for inducibility by a path
/// order: collects the constraints "path of i before path of j" from every
/// spanning tree and looks for a directed cycle among distinct paths.
struct InducibilityReport {
  bool contradiction = false;
  std::vector<TreePath> cycle;  // closed: front() == back() when found
  int constraints = 0;

  explicit operator bool() const { return contradiction; }
};

InducibilityReport check_inducibility(const Multigraph& g, const OrderPolicy& p);

/// Parses a table-policy file: blocks of `treeedge V HEAD COPY` lines,
/// each closed by an `order v0 v1 ... vk` line. Throws ParseError.
TableOrders parse_table_orders(const Multigraph& g, std::string_view text);

std::string serialize_table_orders(const TableOrders& orders);

}  // namespace gpf

#endif  // GPF_TREE_ORDER_HPP

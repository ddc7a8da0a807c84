#ifndef GPF_ROOTED_TREE_HPP
#define GPF_ROOTED_TREE_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpf/multigraph.hpp"

namespace gpf {

/// A subtree of a host graph rooted at 0, stored as one parent edge per
/// non-root member vertex (tail = the vertex, head = its parent). Vertex 0
/// is always a member. Attaching keeps the unique-path-to-root invariant by
/// construction: a vertex can only be attached to an existing member.
class RootedTree {
 public:
  RootedTree() = default;

  /// The singleton tree {0} inside a host with `vertex_count` vertices.
  explicit RootedTree(int vertex_count);

  /// Builds a tree from parent edges. Throws std::invalid_argument if the
  /// edges do not form a tree rooted at 0 (duplicate tails, cycles,
  /// components not reaching 0).
  RootedTree(int vertex_count, const std::vector<EdgeRef>& parent_edges);

  int vertex_count() const { return static_cast<int>(parent_.size()); }

  /// Number of member vertices, including the root.
  int size() const { return size_; }

  bool spans() const { return size_ == vertex_count(); }

  bool contains(VertexId v) const {
    return v == 0 || (v >= 0 && v < vertex_count() && parent_[v].has_value());
  }

  /// Parent edge of a non-root member; throws for the root or non-members.
  const EdgeRef& parent_edge(VertexId v) const;

  /// Grows the tree by one vertex: e.tail must not be a member, e.head must
  /// be. Throws std::invalid_argument otherwise.
  void attach(const EdgeRef& e);

  /// Member vertices in ascending order (always starts with 0).
  std::vector<VertexId> members() const;

  /// Children of a member vertex, ascending.
  std::vector<VertexId> children(VertexId v) const;

  /// Number of edges on the path from v to the root.
  int height(VertexId v) const;

  /// All parent edges, sorted by tail vertex.
  std::vector<EdgeRef> edges() const;

  /// True iff every parent edge is an edge of g (tree identity is tied to
  /// concrete edge copies).
  bool valid_in(const Multigraph& g) const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
  friend auto operator<=>(const RootedTree&, const RootedTree&) = default;

 private:
  std::vector<std::optional<EdgeRef>> parent_{std::nullopt};  // index 0 unused
  int size_ = 1;
};

/// A path <s1,...,sl> from a vertex down to the root: edges[k] is the edge
/// (s_{k+1}, s_k) with s_0 = 0, so edges are listed root-outward and the
/// path's vertex is the tail of the last edge. The empty path is the root
/// alone.
struct TreePath {
  std::vector<EdgeRef> edges;

  /// The vertex sequence <s1,...,sl>.
  std::vector<VertexId> vertices() const;

  size_t length() const { return edges.size(); }

  /// s_l, or 0 for the empty path.
  VertexId endpoint() const { return edges.empty() ? 0 : edges.back().tail; }

  friend bool operator==(const TreePath&, const TreePath&) = default;
  friend auto operator<=>(const TreePath&, const TreePath&) = default;
};

/// The unique path in t from v to the root. Throws if v is not a member.
TreePath tree_path(const RootedTree& t, VertexId v);

/// Tree text format: one `treeedge V HEAD COPY` line per non-root member,
/// sorted by V. The singleton tree serializes to the empty string.
std::string serialize_tree(const RootedTree& t);

/// Parses the tree text format and validates every edge against g.
/// Throws ParseError on malformed input or edges absent from g.
RootedTree parse_tree(const Multigraph& g, std::string_view text);

}  // namespace gpf

#endif  // GPF_ROOTED_TREE_HPP

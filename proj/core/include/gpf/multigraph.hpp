#ifndef GPF_MULTIGRAPH_HPP
#define GPF_MULTIGRAPH_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gpf {

/// Dense vertex index in 0..n. Vertex 0 is always the root.
using VertexId = int;

/// One concrete edge copy. `copy` positions the edge among the parallel
/// edges tail->head, in insertion (file line) order.
struct EdgeRef {
  VertexId tail = 0;
  VertexId head = 0;
  int copy = 0;

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Error raised while parsing any of the text formats. `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Directed multigraph on vertices {0..n} without loops. Immutable after
/// construction; parallel edges are distinguished by their copy index.
class Multigraph {
 public:
  /// Builds a graph from (tail, head) pairs. Copy indices are assigned in
  /// the order the pairs appear. Throws std::invalid_argument on loops or
  /// out-of-range vertices.
  Multigraph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges);

  int vertex_count() const { return vertex_count_; }

  /// Number of non-root vertices (the n of an n-tuple parking candidate).
  int non_root_count() const { return vertex_count_ - 1; }

  /// Number of parallel edges tail->head.
  int multiplicity(VertexId tail, VertexId head) const;

  /// Total out-degree of v (sum of multiplicities over all heads).
  int out_degree(VertexId v) const;

  /// All edges with tail v, heads ascending, parallel copies in copy order.
  std::vector<EdgeRef> out_edges(VertexId v) const;

  bool has_edge(const EdgeRef& e) const;

  /// Every edge copy, in insertion order. For parsed graphs this is file
  /// line order; for constructed graphs it is (tail, head, copy) order.
  const std::vector<EdgeRef>& edges() const { return edge_list_; }

  /// Position of e in edges(); the global edge numbering used by the
  /// edge-label path comparator. Throws if e is not an edge of the graph.
  int edge_number(const EdgeRef& e) const;

  /// True iff multiplicity(i,j) == multiplicity(j,i) for all pairs.
  bool is_symmetric() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int vertex_count_ = 1;
  std::vector<std::vector<int>> multiplicity_;  // [tail][head]
  std::vector<int> out_degree_;
  std::vector<EdgeRef> edge_list_;
};

/// Parses the graph text format: `#` comments, a `vertices N` header, then
/// one `edge TAIL HEAD` line per edge copy. Throws ParseError.
Multigraph parse_graph(std::string_view text);

/// Canonical text form: header plus edge lines sorted by (tail, head, copy).
/// parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Multigraph& g);

/// K_{n+1} as a digraph: exactly one edge (i, j) for every ordered pair of
/// distinct vertices in 0..n.
Multigraph complete_graph(int n);

}  // namespace gpf

#endif  // GPF_MULTIGRAPH_HPP

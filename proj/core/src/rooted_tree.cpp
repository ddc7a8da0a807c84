#include "gpf/rooted_tree.hpp"

#include <algorithm>
#include <sstream>

namespace gpf {

RootedTree::RootedTree(int vertex_count) {
  if (vertex_count < 1) {
    throw std::invalid_argument("tree host needs at least the root vertex");
  }
  parent_.assign(vertex_count, std::nullopt);
}

RootedTree::RootedTree(int vertex_count, const std::vector<EdgeRef>& parent_edges)
    : RootedTree(vertex_count) {
  for (const EdgeRef& e : parent_edges) {
    if (e.tail <= 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count) {
      throw std::invalid_argument("tree edge endpoint out of range");
    }
    if (parent_[e.tail].has_value()) {
      throw std::invalid_argument("vertex has two parent edges");
    }
    parent_[e.tail] = e;
    ++size_;
  }
  // Every member must reach 0 without revisiting a vertex.
  for (VertexId v = 1; v < vertex_count; ++v) {
    if (!parent_[v]) continue;
    VertexId cur = v;
    int steps = 0;
    while (cur != 0) {
      if (!parent_[cur] || ++steps > vertex_count) {
        throw std::invalid_argument("tree edges do not all lead to the root");
      }
      cur = parent_[cur]->head;
    }
  }
}

const EdgeRef& RootedTree::parent_edge(VertexId v) const {
  if (v <= 0 || v >= vertex_count() || !parent_[v]) {
    throw std::invalid_argument("vertex has no parent edge in the tree");
  }
  return *parent_[v];
}

void RootedTree::attach(const EdgeRef& e) {
  if (e.tail <= 0 || e.tail >= vertex_count() || contains(e.tail)) {
    throw std::invalid_argument("attach tail must be a new non-root vertex");
  }
  if (!contains(e.head)) {
    throw std::invalid_argument("attach head must already be a member");
  }
  parent_[e.tail] = e;
  ++size_;
}

std::vector<VertexId> RootedTree::members() const {
  std::vector<VertexId> result;
  result.reserve(size_);
  result.push_back(0);
  for (VertexId v = 1; v < vertex_count(); ++v) {
    if (parent_[v]) result.push_back(v);
  }
  return result;
}

std::vector<VertexId> RootedTree::children(VertexId v) const {
  std::vector<VertexId> result;
  for (VertexId c = 1; c < vertex_count(); ++c) {
    if (parent_[c] && parent_[c]->head == v) result.push_back(c);
  }
  return result;
}

int RootedTree::height(VertexId v) const {
  if (!contains(v)) {
    throw std::invalid_argument("height of a non-member vertex");
  }
  int h = 0;
  for (VertexId cur = v; cur != 0; cur = parent_[cur]->head) ++h;
  return h;
}

std::vector<EdgeRef> RootedTree::edges() const {
  std::vector<EdgeRef> result;
  result.reserve(size_ - 1);
  for (VertexId v = 1; v < vertex_count(); ++v) {
    if (parent_[v]) result.push_back(*parent_[v]);
  }
  return result;
}

bool RootedTree::valid_in(const Multigraph& g) const {
  if (vertex_count() != g.vertex_count()) return false;
  for (VertexId v = 1; v < vertex_count(); ++v) {
    if (parent_[v] && !g.has_edge(*parent_[v])) return false;
  }
  return true;
}

std::vector<VertexId> TreePath::vertices() const {
  std::vector<VertexId> result;
  result.reserve(edges.size());
  for (const EdgeRef& e : edges) result.push_back(e.tail);
  return result;
}

TreePath tree_path(const RootedTree& t, VertexId v) {
  if (!t.contains(v)) {
    throw std::invalid_argument("tree_path of a non-member vertex");
  }
  TreePath path;
  for (VertexId cur = v; cur != 0; cur = t.parent_edge(cur).head) {
    path.edges.push_back(t.parent_edge(cur));
  }
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

std::string serialize_tree(const RootedTree& t) {
  std::ostringstream out;
  for (const EdgeRef& e : t.edges()) {
    out << "treeedge " << e.tail << " " << e.head << " " << e.copy << "\n";
  }
  return out.str();
}

RootedTree parse_tree(const Multigraph& g, std::string_view text) {
  std::istringstream input{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::vector<EdgeRef> edges;

  while (std::getline(input, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword != "treeedge") {
      throw ParseError(line_no, "unknown directive '" + keyword + "'");
    }
    EdgeRef e;
    if (!(fields >> e.tail >> e.head >> e.copy)) {
      throw ParseError(line_no, "treeedge needs VERTEX HEAD COPY");
    }
    if (!g.has_edge(e)) {
      throw ParseError(line_no, "treeedge is not an edge of the graph");
    }
    edges.push_back(e);
  }
  try {
    return RootedTree(g.vertex_count(), edges);
  } catch (const std::invalid_argument& err) {
    throw ParseError(line_no, err.what());
  }
}

}  // namespace gpf

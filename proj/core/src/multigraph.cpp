#include "gpf/multigraph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gpf {

Multigraph::Multigraph(int vertex_count,
                       const std::vector<std::pair<VertexId, VertexId>>& edges)
    : vertex_count_(vertex_count),
      multiplicity_(vertex_count, std::vector<int>(vertex_count, 0)),
      out_degree_(vertex_count, 0) {
  if (vertex_count < 1) {
    throw std::invalid_argument("graph needs at least the root vertex");
  }
  edge_list_.reserve(edges.size());
  for (const auto& [tail, head] : edges) {
    if (tail < 0 || tail >= vertex_count_ || head < 0 || head >= vertex_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (tail == head) {
      throw std::invalid_argument("loop edges are not allowed");
    }
    edge_list_.push_back({tail, head, multiplicity_[tail][head]});
    ++multiplicity_[tail][head];
    ++out_degree_[tail];
  }
}

int Multigraph::multiplicity(VertexId tail, VertexId head) const {
  return multiplicity_.at(tail).at(head);
}

int Multigraph::out_degree(VertexId v) const { return out_degree_.at(v); }

std::vector<EdgeRef> Multigraph::out_edges(VertexId v) const {
  std::vector<EdgeRef> result;
  result.reserve(out_degree_.at(v));
  for (VertexId head = 0; head < vertex_count_; ++head) {
    for (int copy = 0; copy < multiplicity_[v][head]; ++copy) {
      result.push_back({v, head, copy});
    }
  }
  return result;
}

bool Multigraph::has_edge(const EdgeRef& e) const {
  if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 || e.head >= vertex_count_) {
    return false;
  }
  return e.copy >= 0 && e.copy < multiplicity_[e.tail][e.head];
}

int Multigraph::edge_number(const EdgeRef& e) const {
  auto it = std::find(edge_list_.begin(), edge_list_.end(), e);
  if (it == edge_list_.end()) {
    throw std::invalid_argument("edge is not part of the graph");
  }
  return static_cast<int>(it - edge_list_.begin());
}

bool Multigraph::is_symmetric() const {
  for (VertexId i = 0; i < vertex_count_; ++i) {
    for (VertexId j = i + 1; j < vertex_count_; ++j) {
      if (multiplicity_[i][j] != multiplicity_[j][i]) return false;
    }
  }
  return true;
}

namespace {

// Strips a trailing comment and surrounding whitespace.
std::string clean_line(std::string line) {
  if (auto pos = line.find('#'); pos != std::string::npos) {
    line.erase(pos);
  }
  auto is_space = [](unsigned char c) { return std::isspace(c); };
  while (!line.empty() && is_space(line.back())) line.pop_back();
  size_t start = 0;
  while (start < line.size() && is_space(line[start])) ++start;
  return line.substr(start);
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::istringstream input{std::string(text)};
  std::string raw;
  int line_no = 0;
  int vertex_count = -1;
  std::vector<std::pair<VertexId, VertexId>> edges;

  while (std::getline(input, raw)) {
    ++line_no;
    std::string line = clean_line(raw);
    if (line.empty()) continue;

    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;

    if (keyword == "vertices") {
      if (vertex_count != -1) {
        throw ParseError(line_no, "duplicate vertices header");
      }
      long n = 0;
      if (!(fields >> n) || n < 1) {
        throw ParseError(line_no, "vertices header needs a positive count");
      }
      std::string rest;
      if (fields >> rest) {
        throw ParseError(line_no, "trailing tokens after vertex count");
      }
      vertex_count = static_cast<int>(n);
    } else if (keyword == "edge") {
      if (vertex_count == -1) {
        throw ParseError(line_no, "edge line before vertices header");
      }
      long tail = 0, head = 0;
      if (!(fields >> tail >> head)) {
        throw ParseError(line_no, "edge line needs two vertex indices");
      }
      std::string rest;
      if (fields >> rest) {
        throw ParseError(line_no, "trailing tokens after edge endpoints");
      }
      if (tail < 0 || tail >= vertex_count || head < 0 || head >= vertex_count) {
        throw ParseError(line_no, "edge endpoint out of range");
      }
      if (tail == head) {
        throw ParseError(line_no, "loop edges are not allowed");
      }
      edges.emplace_back(static_cast<VertexId>(tail), static_cast<VertexId>(head));
    } else {
      throw ParseError(line_no, "unknown directive '" + keyword + "'");
    }
  }
  if (vertex_count == -1) {
    throw ParseError(line_no, "missing vertices header");
  }
  return Multigraph(vertex_count, edges);
}

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (VertexId tail = 0; tail < g.vertex_count(); ++tail) {
    for (VertexId head = 0; head < g.vertex_count(); ++head) {
      for (int copy = 0; copy < g.multiplicity(tail, head); ++copy) {
        out << "edge " << tail << " " << head << "\n";
      }
    }
  }
  return out.str();
}

Multigraph complete_graph(int n) {
  if (n < 1) {
    throw std::invalid_argument("complete_graph needs n >= 1");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<size_t>(n + 1) * n);
  for (VertexId i = 0; i <= n; ++i) {
    for (VertexId j = 0; j <= n; ++j) {
      if (i != j) edges.emplace_back(i, j);
    }
  }
  return Multigraph(n + 1, edges);
}

}  // namespace gpf

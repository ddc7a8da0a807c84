#include "gpf/sandpile.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gpf/bijection.hpp"
#include "gpf/tree_order.hpp"

namespace gpf {

SandpileConfig to_allowed_config(const Multigraph& g, const ParkingCandidate& b) {
  if (static_cast<int>(b.size()) != g.non_root_count()) {
    throw std::invalid_argument("candidate length must equal the non-root vertex count");
  }
  SandpileConfig u(b.size());
  for (size_t i = 0; i < b.size(); ++i) {
    u[i] = g.out_degree(static_cast<VertexId>(i) + 1) - b[i];
  }
  return u;
}

ParkingCandidate from_allowed_config(const Multigraph& g, const SandpileConfig& u) {
  if (static_cast<int>(u.size()) != g.non_root_count()) {
    throw std::invalid_argument("config length must equal the non-root vertex count");
  }
  ParkingCandidate b(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    b[i] = g.out_degree(static_cast<VertexId>(i) + 1) - u[i];
  }
  return b;
}

bool burning_waves_match_heights(const Multigraph& g, const ParkingCandidate& b) {
  if (!g.is_symmetric()) {
    throw std::invalid_argument("waves/heights comparison needs a symmetric graph");
  }
  BurnReport burn = is_parking_burning(g, b);
  if (!burn.accepted) {
    throw std::invalid_argument("not a parking function");
  }
  PhiResult grown = phi(g, b, OrderPolicy::bf());
  if (!grown.success) {
    throw std::invalid_argument("not a parking function");  // unreachable after burn
  }

  std::vector<std::vector<VertexId>> levels;
  for (VertexId v : grown.tree.members()) {
    size_t h = static_cast<size_t>(grown.tree.height(v));
    if (levels.size() <= h) levels.resize(h + 1);
    levels[h].push_back(v);
  }
  return levels == burn.waves;  // members() ascends, waves are built ascending
}

UndirectedEdgeOrder UndirectedEdgeOrder::lex(const Multigraph& g) {
  UndirectedEdgeOrder order;
  int next = 0;
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
      if (g.multiplicity(a, b) > 0 || g.multiplicity(b, a) > 0) {
        order.set_rank(a, b, next++);
      }
    }
  }
  return order;
}

UndirectedEdgeOrder UndirectedEdgeOrder::reverse_lex(const Multigraph& g) {
  UndirectedEdgeOrder lex_order = lex(g);
  UndirectedEdgeOrder order;
  int top = static_cast<int>(lex_order.size()) - 1;
  for (const auto& [pair, rank] : lex_order.rank_) {
    order.rank_[pair] = top - rank;
  }
  return order;
}

void UndirectedEdgeOrder::set_rank(VertexId a, VertexId b, int rank) {
  if (a == b) throw std::invalid_argument("edge order cannot rank a loop");
  rank_[std::minmax(a, b)] = rank;
}

int UndirectedEdgeOrder::rank(VertexId a, VertexId b) const {
  auto it = rank_.find(std::minmax(a, b));
  if (it == rank_.end()) {
    throw std::invalid_argument("edge order does not cover the requested pair");
  }
  return it->second;
}

bool UndirectedEdgeOrder::covers(VertexId a, VertexId b) const {
  return rank_.count(std::minmax(a, b)) > 0;
}

UndirectedEdgeOrder parse_edge_order(const Multigraph& g, std::string_view text) {
  std::istringstream input{std::string(text)};
  std::string raw;
  int line_no = 0;
  int next_rank = 0;
  UndirectedEdgeOrder order;

  while (std::getline(input, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword != "rank") {
      throw ParseError(line_no, "unknown directive '" + keyword + "'");
    }
    VertexId a = 0, b = 0;
    if (!(fields >> a >> b)) {
      throw ParseError(line_no, "rank line needs two vertex indices");
    }
    if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count() || a == b) {
      throw ParseError(line_no, "rank endpoints out of range");
    }
    if (g.multiplicity(a, b) == 0 && g.multiplicity(b, a) == 0) {
      throw ParseError(line_no, "ranked pair is not adjacent in the graph");
    }
    if (order.covers(a, b)) {
      throw ParseError(line_no, "duplicate rank line for the pair");
    }
    order.set_rank(a, b, next_rank++);
  }

  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
      if ((g.multiplicity(a, b) > 0 || g.multiplicity(b, a) > 0) && !order.covers(a, b)) {
        throw ParseError(line_no, "edge order does not cover every adjacent pair");
      }
    }
  }
  return order;
}

namespace {

void require_simple_symmetric(const Multigraph& g) {
  if (!g.is_symmetric()) {
    throw std::invalid_argument("operation needs a symmetric graph");
  }
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b = 0; b < g.vertex_count(); ++b) {
      if (g.multiplicity(a, b) > 1) {
        throw std::invalid_argument("parallel edges are not supported here");
      }
    }
  }
}

}  // namespace

int external_activity(const Multigraph& g, const RootedTree& tree,
                      const UndirectedEdgeOrder& order) {
  require_simple_symmetric(g);
  if (!tree.spans() || !tree.valid_in(g)) {
    throw std::invalid_argument("external activity needs a spanning tree");
  }

  auto in_tree = [&](VertexId a, VertexId b) {
    return (a != 0 && tree.parent_edge(a).head == b) ||
           (b != 0 && tree.parent_edge(b).head == a);
  };

  int active = 0;
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
      if (g.multiplicity(a, b) == 0 && g.multiplicity(b, a) == 0) continue;
      if (in_tree(a, b)) continue;

      // The cycle closed by {a,b} consists of the tree paths from a and b
      // up to their meeting point.
      std::vector<VertexId> pa, pb;
      for (VertexId v = a; v != 0; v = tree.parent_edge(v).head) pa.push_back(v);
      pa.push_back(0);
      for (VertexId v = b; v != 0; v = tree.parent_edge(v).head) pb.push_back(v);
      pb.push_back(0);
      while (pa.size() >= 2 && pb.size() >= 2 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
        pa.pop_back();
        pb.pop_back();
      }

      int rank_e = order.rank(a, b);
      bool is_min = true;
      for (const std::vector<VertexId>& side : {pa, pb}) {
        for (size_t i = 0; i + 1 < side.size(); ++i) {
          if (order.rank(side[i], side[i + 1]) < rank_e) is_min = false;
        }
      }
      if (is_min) ++active;
    }
  }
  return active;
}

RootedTree greedy_min_path(const Multigraph& g, const UndirectedEdgeOrder& order) {
  require_simple_symmetric(g);
  RootedTree path(g.vertex_count());
  VertexId endpoint = 0;

  for (int step = 1; step < g.vertex_count(); ++step) {
    VertexId best = -1;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (path.contains(v) || g.multiplicity(endpoint, v) == 0) continue;
      if (best < 0 || order.rank(endpoint, v) < order.rank(endpoint, best)) best = v;
    }
    if (best < 0) {
      throw std::invalid_argument("greedy path is stuck before spanning the graph");
    }
    path.attach({best, endpoint, 0});
    endpoint = best;
  }
  return path;
}

SeparationReport separation_experiment(int n) {
  if (n < 2) {
    throw std::invalid_argument("separation experiment needs n >= 2");
  }
  const Multigraph g = complete_graph(n);
  SeparationReport report;

  // (a) Hamiltonian-path trees map to permutations of 0..n-1 under every
  // built-in policy.
  std::vector<VertexId> tail(n);
  for (int i = 0; i < n; ++i) tail[i] = i + 1;
  std::vector<OrderPolicy> policies = OrderPolicy::builtins();
  report.all_theta_permutations = true;
  do {
    ++report.hamiltonian_paths;
    std::vector<EdgeRef> edges;
    VertexId previous = 0;
    for (VertexId v : tail) {
      edges.push_back({v, previous, 0});
      previous = v;
    }
    RootedTree tree(n + 1, edges);
    for (const OrderPolicy& p : policies) {
      ParkingCandidate b = theta(g, tree, p);
      ParkingCandidate sorted = b;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < n; ++i) {
        if (sorted[i] != i) {
          report.all_theta_permutations = false;
          if (report.failures.size() < 10) {
            report.failures.push_back("policy " + p.name() + " maps a path to " +
                                      format_parking(b));
          }
          break;
        }
      }
    }
  } while (std::next_permutation(tail.begin(), tail.end()));

  // (b) Activity separates the greedy path from a path avoiding the
  // globally smallest edge {0,1}: 0-2-1-3-4-...-n.
  UndirectedEdgeOrder lex = UndirectedEdgeOrder::lex(g);
  RootedTree greedy = greedy_min_path(g, lex);
  report.greedy_activity = external_activity(g, greedy, lex);

  std::vector<EdgeRef> witness_edges{{2, 0, 0}, {1, 2, 0}};
  VertexId previous = 1;
  for (VertexId v = 3; v <= n; ++v) {
    witness_edges.push_back({v, previous, 0});
    previous = v;
  }
  RootedTree witness(n + 1, witness_edges);
  report.witness_activity = external_activity(g, witness, lex);
  report.witness_path = serialize_tree(witness);
  return report;
}

}  // namespace gpf

#include "gpf/tree_order.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "gpf/enumeration.hpp"

namespace gpf {

Ordering flip(Ordering o) {
  switch (o) {
    case Ordering::less:
      return Ordering::greater;
    case Ordering::greater:
      return Ordering::less;
    default:
      return o;
  }
}

namespace {

Ordering from_three_way(std::strong_ordering c) {
  if (c < 0) return Ordering::less;
  if (c > 0) return Ordering::greater;
  return Ordering::equal;
}

// Ties between distinct paths mean the comparator cannot separate them.
Ordering resolve_tie(const TreePath& a, const TreePath& b) {
  return a == b ? Ordering::equal : Ordering::incomparable;
}

std::vector<int> sorted_vertices(const TreePath& p) {
  std::vector<int> v = p.vertices();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Ordering compare_paths(const Multigraph& g, const TreePath& a, const TreePath& b,
                       PathComparator c) {
  switch (c) {
    case PathComparator::lex: {
      auto va = a.vertices(), vb = b.vertices();
      if (va == vb) return resolve_tie(a, b);
      return from_three_way(va <=> vb);
    }
    case PathComparator::length_then_endpoint: {
      if (a.length() != b.length())
        return a.length() < b.length() ? Ordering::less : Ordering::greater;
      if (a.endpoint() != b.endpoint())
        return a.endpoint() < b.endpoint() ? Ordering::less : Ordering::greater;
      return resolve_tie(a, b);
    }
    case PathComparator::max_of_difference: {
      auto va = sorted_vertices(a), vb = sorted_vertices(b);
      std::vector<int> only_a, only_b;
      std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(),
                          std::back_inserter(only_a));
      std::set_difference(vb.begin(), vb.end(), va.begin(), va.end(),
                          std::back_inserter(only_b));
      int max_a = only_a.empty() ? -1 : only_a.back();
      int max_b = only_b.empty() ? -1 : only_b.back();
      if (max_a != max_b) return max_a < max_b ? Ordering::less : Ordering::greater;
      return resolve_tie(a, b);
    }
    case PathComparator::increasing_rearrangement_lex: {
      // Colex: the increasing rearrangements are read from the largest
      // element down; when one runs out it is the smaller.
      auto va = sorted_vertices(a), vb = sorted_vertices(b);
      auto ia = va.rbegin(), ib = vb.rbegin();
      for (; ia != va.rend() && ib != vb.rend(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib ? Ordering::less : Ordering::greater;
      }
      if (ia == va.rend() && ib != vb.rend()) return Ordering::less;
      if (ib == vb.rend() && ia != va.rend()) return Ordering::greater;
      return resolve_tie(a, b);
    }
    case PathComparator::sum_then_endpoint: {
      auto va = a.vertices(), vb = b.vertices();
      long sum_a = std::accumulate(va.begin(), va.end(), 0L);
      long sum_b = std::accumulate(vb.begin(), vb.end(), 0L);
      if (sum_a != sum_b) return sum_a < sum_b ? Ordering::less : Ordering::greater;
      if (a.endpoint() != b.endpoint())
        return a.endpoint() < b.endpoint() ? Ordering::less : Ordering::greater;
      return resolve_tie(a, b);
    }
    case PathComparator::edge_label_lex: {
      std::vector<int> na, nb;
      for (const EdgeRef& e : a.edges) na.push_back(g.edge_number(e));
      for (const EdgeRef& e : b.edges) nb.push_back(g.edge_number(e));
      if (na == nb) return resolve_tie(a, b);
      return from_three_way(na <=> nb);
    }
  }
  throw std::logic_error("unreachable comparator kind");
}

bool paths_intersect(const TreePath& a, const TreePath& b) {
  // Shared prefix of the edge sequences.
  size_t k = 0;
  while (k < a.length() && k < b.length() && a.edges[k] == b.edges[k]) ++k;
  // The intersection subgraph is a root path iff no vertex or edge is
  // shared beyond that prefix.
  std::set<VertexId> va, vb;
  for (size_t i = k; i < a.length(); ++i) va.insert(a.edges[i].tail);
  for (size_t i = k; i < b.length(); ++i) vb.insert(b.edges[i].tail);
  for (VertexId v : va) {
    if (vb.count(v)) return false;
  }
  return true;
}

OrderPolicy OrderPolicy::bf() { return OrderPolicy(Kind::bf, PathComparator::lex); }
OrderPolicy OrderPolicy::df() { return OrderPolicy(Kind::df, PathComparator::lex); }
OrderPolicy OrderPolicy::df_rtl() { return OrderPolicy(Kind::df_rtl, PathComparator::lex); }
OrderPolicy OrderPolicy::va() { return OrderPolicy(Kind::va, PathComparator::lex); }

OrderPolicy OrderPolicy::path(PathComparator c) { return OrderPolicy(Kind::path, c); }

OrderPolicy OrderPolicy::table(TableOrders orders) {
  OrderPolicy p(Kind::table, PathComparator::lex);
  p.orders_ = std::make_shared<const TableOrders>(std::move(orders));
  return p;
}

std::optional<OrderPolicy> OrderPolicy::parse(std::string_view name) {
  if (name == "bf") return bf();
  if (name == "df") return df();
  if (name == "df-rtl") return df_rtl();
  if (name == "va") return va();
  if (name == "path:lex") return path(PathComparator::lex);
  if (name == "path:bf") return path(PathComparator::length_then_endpoint);
  if (name == "path:va") return path(PathComparator::max_of_difference);
  if (name == "path:incr") return path(PathComparator::increasing_rearrangement_lex);
  if (name == "path:sum") return path(PathComparator::sum_then_endpoint);
  if (name == "path:edgelex") return path(PathComparator::edge_label_lex);
  return std::nullopt;
}

std::vector<OrderPolicy> OrderPolicy::builtins() {
  std::vector<OrderPolicy> all;
  for (const char* name : {"bf", "df", "df-rtl", "va", "path:lex", "path:bf",
                           "path:va", "path:incr", "path:sum", "path:edgelex"}) {
    all.push_back(*parse(name));
  }
  return all;
}

std::string OrderPolicy::name() const {
  switch (kind_) {
    case Kind::bf:
      return "bf";
    case Kind::df:
      return "df";
    case Kind::df_rtl:
      return "df-rtl";
    case Kind::va:
      return "va";
    case Kind::table:
      return "table";
    case Kind::path:
      switch (comparator_) {
        case PathComparator::lex:
          return "path:lex";
        case PathComparator::length_then_endpoint:
          return "path:bf";
        case PathComparator::max_of_difference:
          return "path:va";
        case PathComparator::increasing_rearrangement_lex:
          return "path:incr";
        case PathComparator::sum_then_endpoint:
          return "path:sum";
        case PathComparator::edge_label_lex:
          return "path:edgelex";
      }
  }
  return "?";
}

namespace {

std::vector<VertexId> breadth_first_order(const RootedTree& t) {
  std::vector<VertexId> order = t.members();
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return t.height(a) < t.height(b); });
  // members() is ascending, so equal heights stay sorted by label.
  return order;
}

void depth_first_visit(const RootedTree& t, VertexId v, bool descending,
                       std::vector<VertexId>& out) {
  out.push_back(v);
  std::vector<VertexId> kids = t.children(v);
  if (descending) std::reverse(kids.begin(), kids.end());
  for (VertexId c : kids) depth_first_visit(t, c, descending, out);
}

std::vector<VertexId> vertex_adding_order(const RootedTree& t) {
  std::vector<VertexId> order{0};
  std::vector<bool> added(t.vertex_count(), false);
  added[0] = true;
  for (int step = 1; step < t.size(); ++step) {
    VertexId next = -1;
    for (VertexId v : t.members()) {
      if (added[v] || !added[t.parent_edge(v).head]) continue;
      next = v;
      break;  // members() ascending: first hit is the smallest
    }
    if (next < 0) throw std::logic_error("disconnected tree in vertex-adding order");
    added[next] = true;
    order.push_back(next);
  }
  return order;
}

std::vector<VertexId> path_order(const Multigraph& g, const RootedTree& t,
                                 PathComparator c) {
  std::vector<VertexId> order = t.members();
  std::vector<TreePath> paths(t.vertex_count());
  for (VertexId v : order) paths[v] = tree_path(t, v);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    switch (compare_paths(g, paths[a], paths[b], c)) {
      case Ordering::less:
        return true;
      case Ordering::greater:
        return false;
      default:
        throw PolicyError("path comparator cannot separate the tree paths of " +
                          std::to_string(a) + " and " + std::to_string(b));
    }
  });
  return order;
}

std::vector<VertexId> table_order(const RootedTree& t, const TableOrders& orders) {
  auto it = orders.find(serialize_tree(t));
  if (it == orders.end()) {
    throw PolicyError("table policy has no order for the requested tree");
  }
  return it->second;
}

}  // namespace

std::vector<VertexId> compute_order(const Multigraph& g, const RootedTree& t,
                                    const OrderPolicy& p) {
  switch (p.kind()) {
    case OrderPolicy::Kind::bf:
      return breadth_first_order(t);
    case OrderPolicy::Kind::df: {
      std::vector<VertexId> out;
      out.reserve(t.size());
      depth_first_visit(t, 0, false, out);
      return out;
    }
    case OrderPolicy::Kind::df_rtl: {
      std::vector<VertexId> out;
      out.reserve(t.size());
      depth_first_visit(t, 0, true, out);
      return out;
    }
    case OrderPolicy::Kind::va:
      return vertex_adding_order(t);
    case OrderPolicy::Kind::path:
      return path_order(g, t, p.comparator());
    case OrderPolicy::Kind::table:
      return table_order(t, p.orders());
  }
  throw std::logic_error("unreachable policy kind");
}

namespace {

std::string describe_tree(const RootedTree& t) {
  std::string s = serialize_tree(t);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s.empty() ? "(root only)" : s;
}

// Checks that the order is a permutation of t's members starting at 0 and
// that every child follows its parent. Returns an empty string on success.
std::string check_condition_one(const RootedTree& t, const std::vector<VertexId>& order) {
  std::vector<VertexId> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != t.members() || order.empty() || order.front() != 0) {
    return "order is not a root-first permutation of the subtree " + describe_tree(t);
  }
  std::vector<int> rank(t.vertex_count(), -1);
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  for (VertexId v : t.members()) {
    if (v == 0) continue;
    const EdgeRef& e = t.parent_edge(v);
    if (rank[e.head] > rank[v]) {
      return "child " + std::to_string(v) + " ordered before its parent " +
             std::to_string(e.head) + " on subtree " + describe_tree(t);
    }
  }
  return {};
}

}  // namespace

ProperSetReport validate_proper_set(const Multigraph& g, const OrderPolicy& p,
                                    int max_subtree_size) {
  ProperSetReport report;
  report.valid = true;

  // Any subtree arises from a larger one by removing leaves one at a time,
  // and order consistency composes, so checking every subtree against each
  // of its single-leaf removals covers condition (2).
  for_each_subtree(g, max_subtree_size, [&](const RootedTree& t) {
    if (!report.valid) return;
    ++report.subtrees_checked;

    std::vector<VertexId> order;
    try {
      order = compute_order(g, t, p);
    } catch (const PolicyError& e) {
      report.valid = false;
      report.violation = e.what();
      return;
    }
    if (std::string msg = check_condition_one(t, order); !msg.empty()) {
      report.valid = false;
      report.violation = "condition (1): " + msg;
      return;
    }

    for (VertexId leaf : t.members()) {
      if (leaf == 0 || !t.children(leaf).empty()) continue;
      std::vector<EdgeRef> kept;
      for (const EdgeRef& e : t.edges()) {
        if (e.tail != leaf) kept.push_back(e);
      }
      RootedTree smaller(t.vertex_count(), kept);

      std::vector<VertexId> restricted;
      for (VertexId v : order) {
        if (v != leaf) restricted.push_back(v);
      }
      std::vector<VertexId> sub_order;
      try {
        sub_order = compute_order(g, smaller, p);
      } catch (const PolicyError& e) {
        report.valid = false;
        report.violation = e.what();
        return;
      }
      if (sub_order != restricted) {
        report.valid = false;
        report.violation = "condition (2): removing leaf " + std::to_string(leaf) +
                           " from subtree " + describe_tree(t) +
                           " changes the order of the remaining vertices";
        return;
      }
    }
  });
  return report;
}

InducibilityReport check_inducibility(const Multigraph& g, const OrderPolicy& p) {
  InducibilityReport report;

  // Gather the constraints path(i) < path(j) for i before j in each
  // spanning tree's order, on distinct paths (keyed by edge sequence).
  std::map<TreePath, std::set<TreePath>> successors;
  for (const RootedTree& t : enumerate_spanning_trees(g)) {
    std::vector<VertexId> order = compute_order(g, t, p);
    std::vector<TreePath> paths;
    paths.reserve(order.size());
    for (VertexId v : order) paths.push_back(tree_path(t, v));
    for (size_t i = 0; i < paths.size(); ++i) {
      for (size_t j = i + 1; j < paths.size(); ++j) {
        if (paths[i] != paths[j] && successors[paths[i]].insert(paths[j]).second) {
          ++report.constraints;
        }
      }
    }
  }

  // Depth-first cycle search over the constraint graph.
  std::map<TreePath, int> state;  // 0 unvisited, 1 on stack, 2 done
  std::vector<TreePath> stack;
  std::function<bool(const TreePath&)> visit = [&](const TreePath& node) {
    state[node] = 1;
    stack.push_back(node);
    if (auto edges = successors.find(node); edges != successors.end()) {
      for (const TreePath& next : edges->second) {
        auto it = state.find(next);
        int s = it == state.end() ? 0 : it->second;
        if (s == 1) {
          auto start = std::find(stack.begin(), stack.end(), next);
          report.cycle.assign(start, stack.end());
          report.cycle.push_back(next);
          return true;
        }
        if (s == 0 && visit(next)) return true;
      }
    }
    stack.pop_back();
    state[node] = 2;
    return false;
  };
  for (const auto& [node, _] : successors) {
    auto it = state.find(node);
    if ((it == state.end() || it->second == 0) && visit(node)) {
      report.contradiction = true;
      break;
    }
  }
  return report;
}

TableOrders parse_table_orders(const Multigraph& g, std::string_view text) {
  std::istringstream input{std::string(text)};
  std::string raw;
  int line_no = 0;
  TableOrders table;
  std::vector<EdgeRef> block_edges;

  while (std::getline(input, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;

    if (keyword == "treeedge") {
      EdgeRef e;
      if (!(fields >> e.tail >> e.head >> e.copy)) {
        throw ParseError(line_no, "treeedge needs VERTEX HEAD COPY");
      }
      if (!g.has_edge(e)) {
        throw ParseError(line_no, "treeedge is not an edge of the graph");
      }
      block_edges.push_back(e);
    } else if (keyword == "order") {
      std::vector<VertexId> order;
      VertexId v;
      while (fields >> v) order.push_back(v);
      RootedTree t(g.vertex_count());
      try {
        t = RootedTree(g.vertex_count(), block_edges);
      } catch (const std::invalid_argument& err) {
        throw ParseError(line_no, err.what());
      }
      table[serialize_tree(t)] = order;
      block_edges.clear();
    } else {
      throw ParseError(line_no, "unknown directive '" + keyword + "'");
    }
  }
  if (!block_edges.empty()) {
    throw ParseError(line_no, "tree block without a closing order line");
  }
  return table;
}

std::string serialize_table_orders(const TableOrders& orders) {
  std::ostringstream out;
  for (const auto& [tree, order] : orders) {
    out << tree << "order";
    for (VertexId v : order) out << " " << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace gpf

#include "gpf/classical.hpp"

#include <algorithm>
#include <sstream>

#include "gpf/multigraph.hpp"
#include "gpf/tree_order.hpp"

namespace gpf {

ParkOutcome park_simulate(const ParkingCandidate& b) {
  const int n = static_cast<int>(b.size());
  ParkOutcome outcome;
  outcome.spot_of_driver.assign(n, -1);
  std::vector<int> occupant(n, 0);  // 0 = free, else driver index

  for (int driver = 1; driver <= n; ++driver) {
    int spot = b[driver - 1];
    while (spot < n && occupant[spot] != 0) ++spot;
    if (spot >= n) {
      outcome.failing_driver = driver;
      return outcome;
    }
    occupant[spot] = driver;
    outcome.spot_of_driver[driver - 1] = spot;
  }
  outcome.success = true;
  return outcome;
}

RootedTree tree_from_spot_rule(const ParkingCandidate& b) {
  const int n = static_cast<int>(b.size());
  ParkOutcome outcome = park_simulate(b);
  if (!outcome.success) {
    throw std::invalid_argument("not a parking function: driver " +
                                std::to_string(*outcome.failing_driver) + " cannot park");
  }
  std::vector<int> driver_at_spot(n, 0);
  for (int driver = 1; driver <= n; ++driver) {
    driver_at_spot[outcome.spot_of_driver[driver - 1]] = driver;
  }
  std::vector<EdgeRef> edges;
  for (int i = 1; i <= n; ++i) {
    VertexId parent = b[i - 1] == 0 ? 0 : driver_at_spot[b[i - 1] - 1];
    edges.push_back({i, parent, 0});
  }
  return RootedTree(n + 1, edges);
}

LabeledDyckPath parking_to_dyck(const ParkingCandidate& b) {
  const int n = static_cast<int>(b.size());
  LabeledDyckPath path;
  path.n = n;

  int easts = 0;
  for (int row = 0; row < n; ++row) {
    for (int j = 1; j <= n; ++j) {
      if (b[j - 1] == row) {
        path.steps.push_back({true, j});
        ++easts;
      }
    }
    // Row `row` done: the path has climbed row+1 times after this north
    // step, so it crosses the diagonal unless easts > row.
    if (easts <= row) {
      throw std::invalid_argument("not a parking function: fewer than " +
                                  std::to_string(row + 1) + " values below " +
                                  std::to_string(row + 1));
    }
    path.steps.push_back({false, 0});
  }
  if (easts != n) {  // some favorite spot was >= n
    throw std::invalid_argument("not a parking function: value out of range");
  }
  return path;
}

RootedTree tree_from_dyck(const LabeledDyckPath& d) {
  const Multigraph host = complete_graph(std::max(d.n, 1));
  RootedTree tree(d.n + 1);
  const OrderPolicy rtl = OrderPolicy::df_rtl();

  VertexId current = 0;
  for (const LabeledDyckPath::Step& step : d.steps) {
    if (step.east) {
      tree.attach({step.label, current, 0});
    } else {
      std::vector<VertexId> order = compute_order(host, tree, rtl);
      auto it = std::find(order.begin(), order.end(), current);
      if (it == order.end() || ++it == order.end()) {
        throw std::invalid_argument("malformed path: no successor for the current vertex");
      }
      current = *it;
    }
  }
  return tree;
}

std::string format_dyck(const LabeledDyckPath& d) {
  std::ostringstream out;
  for (size_t i = 0; i < d.steps.size(); ++i) {
    if (i > 0) out << " ";
    if (d.steps[i].east) {
      out << "E(" << d.steps[i].label << ")";
    } else {
      out << "N";
    }
  }
  return out.str();
}

LabeledDyckPath parse_dyck(std::string_view text) {
  LabeledDyckPath path;
  std::istringstream input{std::string(text)};
  std::string token;
  int easts = 0, norths = 0;

  while (input >> token) {
    if (token == "N") {
      path.steps.push_back({false, 0});
      ++norths;
    } else if (token.size() > 3 && token.starts_with("E(") && token.back() == ')') {
      int label = 0;
      try {
        size_t used = 0;
        label = std::stoi(token.substr(2, token.size() - 3), &used);
        if (used != token.size() - 3) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError(1, "bad east step '" + token + "'");
      }
      path.steps.push_back({true, label});
      ++easts;
    } else {
      throw ParseError(1, "bad token '" + token + "' (expected E(label) or N)");
    }
  }

  path.n = easts;
  if (norths != easts) {
    throw ParseError(1, "east and north step counts differ");
  }

  std::vector<bool> seen(path.n + 1, false);
  int balance = 0, previous_label = 0;
  for (const LabeledDyckPath::Step& step : path.steps) {
    if (step.east) {
      if (step.label < 1 || step.label > path.n || seen[step.label]) {
        throw ParseError(1, "labels must be a permutation of 1..n");
      }
      seen[step.label] = true;
      if (previous_label != 0 && step.label <= previous_label) {
        throw ParseError(1, "labels must increase within an east run");
      }
      previous_label = step.label;
      ++balance;
    } else {
      previous_label = 0;
      --balance;
      if (balance < 0) {
        throw ParseError(1, "path crosses the diagonal");
      }
    }
  }
  return path;
}

}  // namespace gpf

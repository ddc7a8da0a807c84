#include "gpf/parking.hpp"

#include <sstream>

namespace gpf {

namespace {

void check_length(const Multigraph& g, const ParkingCandidate& b) {
  if (static_cast<int>(b.size()) != g.non_root_count()) {
    throw std::invalid_argument("candidate length must equal the non-root vertex count");
  }
  for (int value : b) {
    if (value < 0) throw std::invalid_argument("candidate entries must be non-negative");
  }
}

}  // namespace

DefinitionalReport is_parking_definitional(const Multigraph& g, const ParkingCandidate& b) {
  check_length(g, b);
  const int n = g.non_root_count();
  if (n > 25) {
    throw std::invalid_argument("definitional check is exponential; graph too large");
  }

  // A subset fails when no vertex in it has enough edges leaving it.
  // Failing subsets are closed under union, so accumulate their union.
  unsigned violating_union = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool has_witness_vertex = false;
    for (int j = 1; j <= n && !has_witness_vertex; ++j) {
      if (!(mask & (1u << (j - 1)))) continue;
      int outgoing = 0;
      for (VertexId h = 0; h < g.vertex_count(); ++h) {
        bool inside = h != 0 && (mask & (1u << (h - 1)));
        if (!inside) outgoing += g.multiplicity(j, h);
      }
      if (outgoing > b[j - 1]) has_witness_vertex = true;
    }
    if (!has_witness_vertex) violating_union |= mask;
  }

  DefinitionalReport report;
  report.is_parking = violating_union == 0;
  for (int j = 1; j <= n; ++j) {
    if (violating_union & (1u << (j - 1))) report.witness.push_back(j);
  }
  return report;
}

BurnReport is_parking_burning(const Multigraph& g, const ParkingCandidate& b) {
  check_length(g, b);
  const int n = g.non_root_count();

  std::vector<bool> marked(g.vertex_count(), false);
  marked[0] = true;
  BurnReport report;
  report.waves.push_back({0});

  int remaining = n;
  while (remaining > 0) {
    std::vector<VertexId> wave;
    for (VertexId v = 1; v <= n; ++v) {
      if (marked[v]) continue;
      int into_marked = 0;
      for (VertexId h = 0; h < g.vertex_count(); ++h) {
        if (marked[h]) into_marked += g.multiplicity(v, h);
      }
      if (into_marked > b[v - 1]) wave.push_back(v);
    }
    if (wave.empty()) break;
    for (VertexId v : wave) marked[v] = true;
    remaining -= static_cast<int>(wave.size());
    report.waves.push_back(std::move(wave));
  }

  report.accepted = remaining == 0;
  for (VertexId v = 1; v <= n; ++v) {
    if (!marked[v]) report.stuck.push_back(v);
  }
  return report;
}

std::vector<ParkingCandidate> enumerate_parking_functions(const Multigraph& g) {
  const int n = g.non_root_count();
  std::vector<ParkingCandidate> result;
  if (n == 0) {
    result.push_back({});
    return result;
  }
  for (VertexId j = 1; j <= n; ++j) {
    if (g.out_degree(j) == 0) return result;  // U = {j} can never be met
  }

  ParkingCandidate b(n, 0);
  while (true) {
    if (is_parking_burning(g, b).accepted) result.push_back(b);
    int pos = n - 1;
    while (pos >= 0 && b[pos] == g.out_degree(pos + 1) - 1) {
      b[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++b[pos];
  }
  return result;
}

ParkingCandidate parse_parking(std::string_view text) {
  std::istringstream input{std::string(text)};
  ParkingCandidate b;
  std::string token;
  while (input >> token) {
    try {
      size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      if (value < 0) throw ParseError(1, "parking values must be non-negative");
      b.push_back(value);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(1, "bad parking value '" + token + "'");
    }
  }
  return b;
}

std::string format_parking(const ParkingCandidate& b) {
  std::ostringstream out;
  for (size_t i = 0; i < b.size(); ++i) {
    if (i > 0) out << " ";
    out << b[i];
  }
  return out.str();
}

}  // namespace gpf

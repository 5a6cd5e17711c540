// Copyright 2026 The lnn-route Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnn/circuit.hpp"
#include "lnn/errors.hpp"

namespace lnn {

using Weight = std::int64_t;

struct Edge {
  Line u;
  Line v;
  Weight weight;
  bool operator==(const Edge&) const = default;
};

/// Undirected weighted graph over the lines of a circuit.
class AdjacencyGraph {
 public:
  explicit AdjacencyGraph(std::size_t num_vertices) : adj_(num_vertices) {}

  /// Adds `w` to the weight of edge {u, v}, creating it if needed.
  void add_edge(Line u, Line v, Weight w = 1) {
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (u >= adj_.size() || v >= adj_.size()) throw std::out_of_range("edge endpoint out of range");
    if (w < 1) throw std::invalid_argument("edge weights must be positive");
    if (!adj_[u].contains(v)) ++num_edges_;
    adj_[u][v] += w;
    adj_[v][u] += w;
  }

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  Weight weight(Line u, Line v) const {
    auto it = adj_.at(u).find(v);
    return it == adj_[u].end() ? 0 : it->second;
  }

  /// Neighbours of `u` with edge weights, ascending by vertex.
  const std::map<Line, Weight>& neighbors(Line u) const { return adj_.at(u); }

  /// Every edge once, with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Line u = 0; u < adj_.size(); ++u)
      for (auto [v, w] : adj_[u])
        if (u < v) out.push_back({u, v, w});
    return out;
  }

  bool operator==(const AdjacencyGraph&) const = default;

 private:
  std::vector<std::map<Line, Weight>> adj_;
  std::size_t num_edges_ = 0;
};

/**
 * Qubit line adjacency graph: one vertex per line, one unit of weight per
 * control/target co-occurrence. NOT adds nothing, CNOT adds (c, t), a Toffoli
 * adds (c1, t) and (c2, t), a SWAP adds (a, b).
 */
inline AdjacencyGraph build_graph(const Circuit& c) {
  AdjacencyGraph g(c.num_lines());
  for (const auto& gate : c.gates()) {
    if (gate.kind() == GateKind::Mct) {
      throw MustDecomposeError("adjacency graph needs an NCT circuit; decompose MCT gates first");
    }
    for (Line ctl : gate.controls()) g.add_edge(ctl, gate.target());
  }
  return g;
}

/// Sum over edges of weight * |position(u) - position(v)| (weights ignored
/// when `weighted` is false).
inline Weight arrangement_cost(const AdjacencyGraph& g, const LineOrdering& order,
                               bool weighted = true) {
  if (order.size() != g.num_vertices()) throw OrderingMismatch("ordering does not match graph size");
  Weight total = 0;
  for (const auto& e : g.edges()) {
    const Weight d = order[e.u] > order[e.v] ? Weight(order[e.u]) - order[e.v]
                                             : Weight(order[e.v]) - order[e.u];
    total += (weighted ? e.weight : 1) * d;
  }
  return total;
}

/// Debug dump: one vertex per line, `v: n1:w1 n2:w2 ...`.
inline std::string to_adjacency_text(const AdjacencyGraph& g) {
  std::ostringstream os;
  for (Line u = 0; u < g.num_vertices(); ++u) {
    os << u << ':';
    for (auto [v, w] : g.neighbors(u)) os << ' ' << v << ':' << w;
    os << '\n';
  }
  return os.str();
}

}  // namespace lnn

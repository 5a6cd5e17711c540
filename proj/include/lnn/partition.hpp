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

// Multilevel balanced bisection and the line orderings derived from it.
//
// A bisection runs in three phases on the subgraph induced by a vertex subset:
//  1. coarsening by heavy-edge matching until the graph is small,
//  2. greedy graph growing on the coarsest graph from several start vertices,
//  3. projection back through the levels with Fiduccia-Mattheyses refinement.
// Intermediate levels tolerate an imbalance of one coarse vertex; the finest
// level is rebalanced to the exact requested part size.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lnn/circuit.hpp"
#include "lnn/graph.hpp"

namespace lnn {

struct PartitionOptions {
  std::uint64_t seed = 0;
  /// Use edge weights in the cut objective; otherwise every edge counts 1.
  bool weighted_cut = true;
  /// Coarsening stops once a level has at most this many vertices.
  std::size_t coarsen_until = 16;
  int refinement_passes = 10;
  /// Start vertices tried for the initial bisection of the coarsest graph.
  std::size_t initial_tries = 8;
};

/// label[i] is the part of line i, in [0, num_parts).
struct PartitionLabels {
  std::vector<std::uint32_t> label;
  std::uint32_t num_parts = 0;
};

namespace detail {

using Vid = std::uint32_t;
using Side = std::vector<std::uint8_t>;

/// Compressed adjacency of one coarsening level.
struct LevelGraph {
  std::vector<std::size_t> xadj{0};
  std::vector<Vid> adjncy;
  std::vector<Weight> adjwgt;
  std::vector<Weight> vwgt;

  std::size_t size() const { return vwgt.size(); }
  Weight total_vweight() const { return std::accumulate(vwgt.begin(), vwgt.end(), Weight{0}); }
  Weight max_vweight() const {
    return vwgt.empty() ? 0 : *std::max_element(vwgt.begin(), vwgt.end());
  }
};

inline LevelGraph induced(const AdjacencyGraph& g, std::span<const Line> subset, bool weighted) {
  std::vector<std::int64_t> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) local[subset[i]] = static_cast<std::int64_t>(i);
  LevelGraph out;
  out.vwgt.assign(subset.size(), 1);
  for (Line v : subset) {
    for (auto [u, w] : g.neighbors(v)) {
      if (local[u] < 0) continue;
      out.adjncy.push_back(static_cast<Vid>(local[u]));
      out.adjwgt.push_back(weighted ? w : 1);
    }
    out.xadj.push_back(out.adjncy.size());
  }
  return out;
}

struct CoarseLevel {
  LevelGraph graph;
  std::vector<Vid> fine_to_coarse;
};

inline CoarseLevel coarsen(const LevelGraph& g, std::mt19937_64& rng, Weight max_vweight) {
  const std::size_t n = g.size();
  constexpr Vid kUnmatched = ~Vid{0};
  std::vector<Vid> mate(n, kUnmatched);
  std::vector<Vid> order(n);
  std::iota(order.begin(), order.end(), Vid{0});
  std::shuffle(order.begin(), order.end(), rng);

  for (Vid v : order) {
    if (mate[v] != kUnmatched) continue;
    Vid best = v;
    Weight best_w = 0;
    for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
      const Vid u = g.adjncy[e];
      if (mate[u] != kUnmatched || g.vwgt[u] + g.vwgt[v] > max_vweight) continue;
      const Weight w = g.adjwgt[e];
      if (w > best_w || (w == best_w && best != v &&
                         (g.vwgt[u] < g.vwgt[best] || (g.vwgt[u] == g.vwgt[best] && u < best)))) {
        best = u;
        best_w = w;
      }
    }
    mate[v] = best;
    mate[best] = v;
  }

  CoarseLevel out;
  out.fine_to_coarse.assign(n, kUnmatched);
  Vid next = 0;
  for (Vid v = 0; v < n; ++v) {
    if (out.fine_to_coarse[v] != kUnmatched) continue;
    out.fine_to_coarse[v] = next;
    out.fine_to_coarse[mate[v]] = next;
    ++next;
  }
  std::vector<std::vector<Vid>> members(next);
  for (Vid v = 0; v < n; ++v) members[out.fine_to_coarse[v]].push_back(v);

  LevelGraph& cg = out.graph;
  cg.vwgt.assign(next, 0);
  std::vector<std::int64_t> slot(next, -1);
  for (Vid c = 0; c < next; ++c) {
    const std::size_t row = cg.adjncy.size();
    for (Vid v : members[c]) {
      cg.vwgt[c] += g.vwgt[v];
      for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
        const Vid cu = out.fine_to_coarse[g.adjncy[e]];
        if (cu == c) continue;
        if (slot[cu] < 0) {
          slot[cu] = static_cast<std::int64_t>(cg.adjncy.size());
          cg.adjncy.push_back(cu);
          cg.adjwgt.push_back(0);
        }
        cg.adjwgt[static_cast<std::size_t>(slot[cu])] += g.adjwgt[e];
      }
    }
    for (std::size_t e = row; e < cg.adjncy.size(); ++e) slot[cg.adjncy[e]] = -1;
    cg.xadj.push_back(cg.adjncy.size());
  }
  return out;
}

inline Weight cut_of(const LevelGraph& g, const Side& side) {
  Weight cut = 0;
  for (Vid v = 0; v < g.size(); ++v)
    for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e)
      if (side[v] != side[g.adjncy[e]]) cut += g.adjwgt[e];
  return cut / 2;
}

inline Weight weight_of_side0(const LevelGraph& g, const Side& side) {
  Weight w = 0;
  for (Vid v = 0; v < g.size(); ++v)
    if (side[v] == 0) w += g.vwgt[v];
  return w;
}

/// Gain of moving v to the other side: external minus internal edge weight.
inline std::vector<Weight> gains(const LevelGraph& g, const Side& side) {
  std::vector<Weight> out(g.size(), 0);
  for (Vid v = 0; v < g.size(); ++v)
    for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e)
      out[v] += side[v] != side[g.adjncy[e]] ? g.adjwgt[e] : -g.adjwgt[e];
  return out;
}

inline Weight imbalance(Weight w0, Weight target0) { return w0 > target0 ? w0 - target0 : target0 - w0; }

/// Greedy graph growing: side 0 absorbs the best-gain vertex until it reaches target0.
inline Side grow_bisection(const LevelGraph& g, Weight target0, Weight slack, Vid start) {
  Side side(g.size(), 1);
  std::vector<Weight> gain(g.size(), 0);
  for (Vid v = 0; v < g.size(); ++v)
    for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) gain[v] -= g.adjwgt[e];
  std::set<std::pair<Weight, Vid>> queue;  // (-gain, v) over vertices still on side 1
  for (Vid v = 0; v < g.size(); ++v) queue.insert({-gain[v], v});

  Weight w0 = 0;
  auto take = [&](Vid v) {
    queue.erase({-gain[v], v});
    side[v] = 0;
    w0 += g.vwgt[v];
    for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
      const Vid u = g.adjncy[e];
      if (side[u] != 1) continue;
      queue.erase({-gain[u], u});
      gain[u] += 2 * g.adjwgt[e];
      queue.insert({-gain[u], u});
    }
  };
  take(start);
  while (w0 < target0) {
    bool moved = false;
    for (auto [neg, v] : queue) {
      if (w0 + g.vwgt[v] <= target0 + slack) {
        take(v);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return side;
}

/// Moves best-gain vertices off the heavier side until within `slack` of target0.
inline void rebalance(const LevelGraph& g, Side& side, Weight target0, Weight slack) {
  Weight w0 = weight_of_side0(g, side);
  while (imbalance(w0, target0) > slack) {
    const std::uint8_t heavy = w0 > target0 ? 0 : 1;
    const auto gain = gains(g, side);
    std::int64_t best = -1;
    for (Vid v = 0; v < g.size(); ++v) {
      if (side[v] != heavy) continue;
      const Weight nw0 = heavy == 0 ? w0 - g.vwgt[v] : w0 + g.vwgt[v];
      if (imbalance(nw0, target0) >= imbalance(w0, target0)) continue;
      if (best < 0 || gain[v] > gain[static_cast<std::size_t>(best)]) best = v;
    }
    if (best < 0) return;
    side[static_cast<std::size_t>(best)] ^= 1;
    w0 = weight_of_side0(g, side);
  }
}

/**
 * Fiduccia-Mattheyses passes. Moves may leave the balance window
 * [target0 - move_slack, target0 + move_slack]; only states within
 * `accept_slack` are kept as the result of a pass.
 */
inline void fm_refine(const LevelGraph& g, Side& side, Weight target0, Weight accept_slack,
                      Weight move_slack, int passes) {
  const std::size_t n = g.size();
  if (n < 2) return;
  for (int pass = 0; pass < passes; ++pass) {
    auto gain = gains(g, side);
    std::vector<bool> locked(n, false);
    std::set<std::pair<Weight, Vid>> queue[2];
    for (Vid v = 0; v < n; ++v) queue[side[v]].insert({-gain[v], v});

    Weight w0 = weight_of_side0(g, side);
    Weight cut = cut_of(g, side);
    Weight best_cut = cut;
    Weight best_imb = imbalance(w0, target0);
    std::size_t best_len = 0;
    std::vector<Vid> moves;
    std::size_t since_best = 0;
    const std::size_t patience = std::max<std::size_t>(25, n / 4);

    while (moves.size() < n && since_best < patience) {
      std::int64_t pick = -1;
      Weight pick_gain = 0, pick_w0 = 0;
      for (std::uint8_t s = 0; s < 2; ++s) {
        for (auto [neg, v] : queue[s]) {
          const Weight nw0 = s == 0 ? w0 - g.vwgt[v] : w0 + g.vwgt[v];
          if (imbalance(nw0, target0) > move_slack) continue;
          const bool better =
              pick < 0 || -neg > pick_gain ||
              (-neg == pick_gain && imbalance(nw0, target0) < imbalance(pick_w0, target0)) ||
              (-neg == pick_gain && imbalance(nw0, target0) == imbalance(pick_w0, target0) &&
               v < static_cast<Vid>(pick));
          if (better) {
            pick = v;
            pick_gain = -neg;
            pick_w0 = nw0;
          }
          break;
        }
      }
      if (pick < 0) break;
      const Vid v = static_cast<Vid>(pick);
      queue[side[v]].erase({-gain[v], v});
      locked[v] = true;
      const std::uint8_t from = side[v];
      side[v] ^= 1;
      w0 = pick_w0;
      cut -= pick_gain;
      moves.push_back(v);
      for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
        const Vid u = g.adjncy[e];
        if (locked[u]) continue;
        queue[side[u]].erase({-gain[u], u});
        gain[u] += side[u] == from ? 2 * g.adjwgt[e] : -2 * g.adjwgt[e];
        queue[side[u]].insert({-gain[u], u});
      }
      const Weight imb = imbalance(w0, target0);
      if (imb <= accept_slack && (cut < best_cut || (cut == best_cut && imb < best_imb))) {
        best_cut = cut;
        best_imb = imb;
        best_len = moves.size();
        since_best = 0;
      } else {
        ++since_best;
      }
    }
    for (std::size_t i = moves.size(); i > best_len; --i) side[moves[i - 1]] ^= 1;
    if (best_len == 0) break;
  }
}

/// Splits `subset` so that exactly `left_size` vertices land in the first part.
inline std::pair<std::vector<Line>, std::vector<Line>> multilevel_split(
    const AdjacencyGraph& graph, std::span<const Line> subset, std::size_t left_size,
    const PartitionOptions& opts) {
  std::vector<LevelGraph> levels;
  std::vector<std::vector<Vid>> maps;
  levels.push_back(induced(graph, subset, opts.weighted_cut));
  const Weight total = static_cast<Weight>(subset.size());
  const Weight target0 = static_cast<Weight>(left_size);
  std::mt19937_64 rng(opts.seed ^ (0x9E3779B97F4A7C15ull * (subset.size() + subset.front())));

  const std::size_t coarsen_until = std::max<std::size_t>(opts.coarsen_until, 2);
  const Weight max_vweight = std::max<Weight>(
      1, static_cast<Weight>(std::ceil(1.5 * static_cast<double>(total) / coarsen_until)));
  while (levels.back().size() > coarsen_until) {
    CoarseLevel next = coarsen(levels.back(), rng, max_vweight);
    if (next.graph.size() * 20 > levels.back().size() * 19) break;
    maps.push_back(std::move(next.fine_to_coarse));
    levels.push_back(std::move(next.graph));
  }

  auto slack_at = [&](std::size_t level) -> std::pair<Weight, Weight> {
    if (level == 0) return {0, 1};
    const Weight mv = levels[level].max_vweight();
    return {mv, 2 * mv};
  };

  // Initial bisection on the coarsest level.
  const LevelGraph& coarse = levels.back();
  const auto [c_accept, c_move] = slack_at(levels.size() - 1);
  std::vector<Vid> starts{0};
  {
    std::vector<Vid> rest(coarse.size() > 1 ? coarse.size() - 1 : 0);
    std::iota(rest.begin(), rest.end(), Vid{1});
    std::shuffle(rest.begin(), rest.end(), rng);
    for (Vid v : rest) {
      if (starts.size() >= std::max<std::size_t>(opts.initial_tries, 1)) break;
      starts.push_back(v);
    }
  }
  Side side;
  Weight best_cut = 0, best_imb = 0;
  for (Vid s : starts) {
    Side trial = grow_bisection(coarse, target0, c_accept, s);
    rebalance(coarse, trial, target0, c_accept);
    fm_refine(coarse, trial, target0, c_accept, c_move, opts.refinement_passes);
    const Weight cut = cut_of(coarse, trial);
    const Weight imb = imbalance(weight_of_side0(coarse, trial), target0);
    if (side.empty() || imb < best_imb || (imb == best_imb && cut < best_cut)) {
      side = std::move(trial);
      best_cut = cut;
      best_imb = imb;
    }
  }

  // Project and refine.
  for (std::size_t level = levels.size() - 1; level > 0; --level) {
    const auto& map = maps[level - 1];
    Side fine(levels[level - 1].size());
    for (Vid v = 0; v < fine.size(); ++v) fine[v] = side[map[v]];
    side = std::move(fine);
    const auto [accept, move] = slack_at(level - 1);
    rebalance(levels[level - 1], side, target0, accept);
    fm_refine(levels[level - 1], side, target0, accept, move, opts.refinement_passes);
  }
  rebalance(levels.front(), side, target0, 0);

  std::pair<std::vector<Line>, std::vector<Line>> out;
  for (std::size_t i = 0; i < subset.size(); ++i) (side[i] == 0 ? out.first : out.second).push_back(subset[i]);
  return out;
}

}  // namespace detail

/// Total weight of edges between `a` and `b`.
inline Weight cut_weight(const AdjacencyGraph& g, std::span<const Line> a, std::span<const Line> b,
                         bool weighted = true) {
  std::vector<bool> in_b(g.num_vertices(), false);
  for (Line v : b) in_b[v] = true;
  Weight cut = 0;
  for (Line u : a)
    for (auto [v, w] : g.neighbors(u))
      if (in_b[v]) cut += weighted ? w : 1;
  return cut;
}

/**
 * Balanced bisection of `subset` (at least two vertices) with a small cut.
 * The first part has ceil(n/2) vertices, the second floor(n/2); both come back
 * sorted ascending.
 */
inline std::pair<std::vector<Line>, std::vector<Line>> bisect(const AdjacencyGraph& g,
                                                              std::span<const Line> subset,
                                                              const PartitionOptions& opts = {}) {
  if (subset.size() < 2) throw std::invalid_argument("bisect needs at least two vertices");
  std::vector<Line> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted.back() >= g.num_vertices()) {
    throw std::invalid_argument("bisect subset has repeated or out-of-range vertices");
  }
  return detail::multilevel_split(g, sorted, (sorted.size() + 1) / 2, opts);
}

namespace detail {

inline void label_parts(const AdjacencyGraph& g, std::vector<Line> subset, std::uint32_t first,
                        std::uint32_t k, const PartitionOptions& opts, std::vector<std::uint32_t>& label) {
  if (subset.empty()) return;
  if (k == 1 || subset.size() == 1) {
    for (Line v : subset) label[v] = first;
    return;
  }
  const std::uint32_t k_left = (k + 1) / 2;
  const std::size_t left_size = std::min(
      subset.size(), (subset.size() * k_left + k - 1) / k);
  if (left_size == subset.size()) {
    label_parts(g, std::move(subset), first, k_left, opts, label);
    return;
  }
  auto [left, right] = multilevel_split(g, subset, left_size, opts);
  label_parts(g, std::move(left), first, k_left, opts, label);
  label_parts(g, std::move(right), first + k_left, k - k_left, opts, label);
}

inline std::vector<std::vector<Line>> components(const AdjacencyGraph& g) {
  std::vector<std::vector<Line>> out;
  std::vector<bool> seen(g.num_vertices(), false);
  for (Line s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<Line> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto [v, w] : g.neighbors(comp[i]))
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace detail

/**
 * k-way labels by recursive bisection, parts numbered left to right in the
 * bisection tree. With k >= n every part holds at most one vertex.
 */
inline PartitionLabels partition_labels(const AdjacencyGraph& g, std::uint32_t k,
                                        const PartitionOptions& opts = {}) {
  if (k == 0) throw std::invalid_argument("need at least one part");
  PartitionLabels out{std::vector<std::uint32_t>(g.num_vertices(), 0), k};
  std::vector<Line> all(g.num_vertices());
  std::iota(all.begin(), all.end(), Line{0});
  detail::label_parts(g, std::move(all), 0, k, opts, out.label);
  return out;
}

/// Lines stably sorted by label (ties by line index); perm[i] is the rank of line i.
inline LineOrdering order_from_labels(const PartitionLabels& labels) {
  const std::size_t n = labels.label.size();
  for (auto l : labels.label)
    if (l >= labels.num_parts) throw std::invalid_argument("partition label out of range");
  std::vector<Line> lines(n);
  std::iota(lines.begin(), lines.end(), Line{0});
  std::stable_sort(lines.begin(), lines.end(),
                   [&](Line a, Line b) { return labels.label[a] < labels.label[b]; });
  std::vector<Line> perm(n);
  for (std::size_t rank = 0; rank < n; ++rank) perm[lines[rank]] = static_cast<Line>(rank);
  return LineOrdering(std::move(perm));
}

/**
 * Linear arrangement from the leaves of a recursive balanced bisection tree.
 *
 * Connected components are laid out one after another, ordered by their
 * smallest line. At each split the two halves are oriented so that the half
 * pulled harder towards already-placed neighbours on one side goes to that
 * side; ties keep the half holding the smallest line on the left.
 */
inline LineOrdering linear_order(const AdjacencyGraph& g, const PartitionOptions& opts = {}) {
  const std::size_t n = g.num_vertices();
  std::vector<Line> pos(n, 0);
  // Doubled centre of the interval each vertex is currently confined to.
  std::vector<std::int64_t> centre2(n, 0);

  auto span_centre2 = [](std::size_t lo, std::size_t size) {
    return static_cast<std::int64_t>(2 * lo + size - 1);
  };
  auto pull = [&](std::span<const Line> part, std::int64_t c2, const std::vector<bool>& inside) {
    Weight cost = 0;
    for (Line v : part)
      for (auto [u, w] : g.neighbors(v))
        if (!inside[u]) cost += (opts.weighted_cut ? w : 1) * std::abs(c2 - centre2[u]);
    return cost;
  };

  std::vector<bool> inside(n, false);
  auto place = [&](auto&& self, std::vector<Line> subset, std::size_t lo) -> void {
    if (subset.size() == 1) {
      pos[subset[0]] = static_cast<Line>(lo);
      centre2[subset[0]] = span_centre2(lo, 1);
      return;
    }
    auto [a, b] = bisect(g, subset, opts);
    for (Line v : subset) inside[v] = true;
    const Weight ab = pull(a, span_centre2(lo, a.size()), inside) +
                      pull(b, span_centre2(lo + a.size(), b.size()), inside);
    const Weight ba = pull(b, span_centre2(lo, b.size()), inside) +
                      pull(a, span_centre2(lo + b.size(), a.size()), inside);
    for (Line v : subset) inside[v] = false;
    const bool a_has_min = a.front() < b.front();
    if (ba < ab || (ba == ab && !a_has_min)) std::swap(a, b);
    for (Line v : a) centre2[v] = span_centre2(lo, a.size());
    for (Line v : b) centre2[v] = span_centre2(lo + a.size(), b.size());
    const std::size_t mid = lo + a.size();
    self(self, std::move(a), lo);
    self(self, std::move(b), mid);
  };

  std::size_t offset = 0;
  for (auto& comp : detail::components(g)) {
    const std::size_t size = comp.size();
    for (Line v : comp) centre2[v] = span_centre2(offset, size);
    place(place, std::move(comp), offset);
    offset += size;
  }
  return LineOrdering(std::move(pos));
}

}  // namespace lnn

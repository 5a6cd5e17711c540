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

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lnn/circuit.hpp"
#include "lnn/graph.hpp"
#include "lnn/metrics.hpp"
#include "lnn/partition.hpp"

namespace lnn {

inline constexpr std::size_t kExhaustiveLineLimit = 8;

enum class OrderStrategy {
  /// Leaf listing of the recursive bisection tree.
  Recursive,
  /// k-way labels linearised with order_from_labels.
  Labels,
  /// Exhaustive search over all orderings (small circuits only).
  Exhaustive,
  Identity,
};

inline std::string_view to_string(OrderStrategy s) {
  switch (s) {
    case OrderStrategy::Recursive: return "recursive";
    case OrderStrategy::Labels: return "labels";
    case OrderStrategy::Exhaustive: return "exhaustive";
    case OrderStrategy::Identity: return "identity";
  }
  return "?";
}

inline std::optional<OrderStrategy> parse_order_strategy(std::string_view s) {
  for (auto v : {OrderStrategy::Recursive, OrderStrategy::Labels, OrderStrategy::Exhaustive,
                 OrderStrategy::Identity})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

namespace detail {

/// Gates flattened for repeated SWAP-pair evaluation under many orderings.
class PairEvaluator {
 public:
  explicit PairEvaluator(const Circuit& c) {
    for (const auto& g : c.gates()) {
      detail::require_nct(g);
      if (g.kind() == GateKind::Not) continue;
      Item it{};
      it.toffoli = g.kind() == GateKind::Toffoli;
      it.a = g.controls()[0];
      it.b = it.toffoli ? g.controls()[1] : g.target();
      it.t = g.target();
      items_.push_back(it);
    }
  }

  Cost pairs(std::span<const Line> perm) const {
    Cost total = 0;
    for (const auto& it : items_) {
      if (!it.toffoli) {
        total += two_line_pairs(perm[it.a], perm[it.b]);
        continue;
      }
      Line c1 = perm[it.a], c2 = perm[it.b];
      if (c1 > c2) std::swap(c1, c2);
      total += toffoli_pairs(c1, c2, perm[it.t]);
    }
    return total;
  }

 private:
  struct Item {
    Line a, b, t;
    bool toffoli;
  };
  std::vector<Item> items_;
};

}  // namespace detail

/**
 * The ordering minimising circuit_swap_pairs(apply_ordering(c, perm)); ties go
 * to the lexicographically smallest permutation. `g` must be the adjacency
 * graph of `c` (only its size is used). Guarded to `max_lines` lines.
 */
inline LineOrdering best_ordering_exhaustive(const AdjacencyGraph& g, const Circuit& c,
                                             std::size_t max_lines = kExhaustiveLineLimit) {
  if (g.num_vertices() != c.num_lines()) throw OrderingMismatch("graph and circuit sizes differ");
  if (c.num_lines() > max_lines) {
    throw CapacityError("exhaustive ordering limited to " + std::to_string(max_lines) +
                        " lines, circuit has " + std::to_string(c.num_lines()));
  }
  const detail::PairEvaluator eval(c);
  std::vector<Line> perm(c.num_lines());
  std::iota(perm.begin(), perm.end(), Line{0});
  std::vector<Line> best = perm;
  Cost best_pairs = eval.pairs(perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    const Cost p = eval.pairs(perm);
    if (p < best_pairs) {
      best_pairs = p;
      best = perm;
    }
  }
  return LineOrdering(std::move(best));
}

struct ReorderOptions {
  OrderStrategy strategy = OrderStrategy::Recursive;
  PartitionOptions partition;
  /// Parts requested by the label strategy; 0 means one per line.
  std::uint32_t parts = 0;
  /// Fall back to the identity ordering when reordering does not help.
  bool keep_best = false;
  std::size_t exhaustive_max_lines = kExhaustiveLineLimit;
};

struct ReorderResult {
  Circuit reordered;
  LineOrdering ordering;
  SwapCount before;
  SwapCount after;
};

inline LineOrdering compute_ordering(const Circuit& c, const ReorderOptions& opts = {}) {
  const AdjacencyGraph g = build_graph(c);
  switch (opts.strategy) {
    case OrderStrategy::Recursive: return linear_order(g, opts.partition);
    case OrderStrategy::Labels: {
      const auto k = opts.parts ? opts.parts : static_cast<std::uint32_t>(c.num_lines());
      return order_from_labels(partition_labels(g, k, opts.partition));
    }
    case OrderStrategy::Exhaustive:
      return best_ordering_exhaustive(g, c, opts.exhaustive_max_lines);
    case OrderStrategy::Identity: break;
  }
  return LineOrdering::identity(c.num_lines());
}

/// Graph, ordering, relabelled circuit and SWAP pairs before/after. The
/// reordered circuit is returned even when it is worse, unless keep_best is set.
inline ReorderResult reorder_pipeline(const Circuit& c, const ReorderOptions& opts = {}) {
  const SwapCount before = circuit_swap_pairs(c);
  LineOrdering ordering = compute_ordering(c, opts);
  Circuit reordered = apply_ordering(c, ordering);
  SwapCount after = circuit_swap_pairs(reordered);
  if (opts.keep_best && after > before) {
    ordering = LineOrdering::identity(c.num_lines());
    reordered = c;
    after = before;
  }
  return {std::move(reordered), std::move(ordering), before, after};
}

}  // namespace lnn

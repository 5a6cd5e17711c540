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

// SWAP-pair counting and SWAP insertion for linear nearest-neighbour layouts.
//
// A "pair" is one SWAP placed before a gate plus its mirror placed after it, so
// the line order is restored once the gate has executed.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lnn/circuit.hpp"
#include "lnn/errors.hpp"

namespace lnn {

struct SwapCount {
  Cost pairs = 0;

  Cost swap_gates() const { return 2 * pairs; }
  Cost swap_quantum_cost(const CostModel& m = {}) const { return m.swap_cost * swap_gates(); }

  SwapCount& operator+=(SwapCount o) {
    pairs += o.pairs;
    return *this;
  }
  friend SwapCount operator+(SwapCount a, SwapCount b) { return a += b; }
  auto operator<=>(const SwapCount&) const = default;
};

namespace detail {

/// Intermediate lines between two lines.
inline Cost two_line_pairs(Line a, Line b) {
  const Cost d = a > b ? Cost(a) - Cost(b) : Cost(b) - Cost(a);
  return d - 1;
}

/// Rule table for TOFFOLI(c1 < c2, target).
inline Cost toffoli_pairs(Cost c1, Cost c2, Cost t) {
  if (t < c1) {
    if (c1 - t > 1) return (c1 - t - 1) + (c2 - t - 2);
    if (c2 - c1 > 1) return c2 - c1 - 1;
    return 0;
  }
  if (t < c2) {
    Cost s = 0;
    if (t - c1 > 1) s += t - c1 - 1;
    if (c2 - t > 1) s += c2 - t - 1;
    return s;
  }
  if (t - c2 > 1) return (t - c2 - 1) + (t - c1 - 2);
  if (c2 - c1 > 1) return c2 - c1 - 1;
  return 0;
}

inline void require_nct(const Gate& g) {
  if (g.kind() == GateKind::Mct) {
    throw MustDecomposeError("C^" + std::to_string(g.num_controls()) +
                             "NOT must be decomposed before SWAP counting");
  }
}

/// Moves the line at `from` to `to` through adjacent swaps, appending them to `out`
/// and keeping `where` (current position of each tracked line) up to date.
inline void walk(Line from, Line to, std::vector<std::pair<Line, Line>>& out,
                 std::vector<Line*> tracked) {
  auto bump = [&](Line a, Line b) {
    out.emplace_back(a, b);
    for (Line* p : tracked) {
      if (*p == a) *p = b;
      else if (*p == b) *p = a;
    }
  };
  while (from > to) {
    bump(from - 1, from);
    --from;
  }
  while (from < to) {
    bump(from, from + 1);
    ++from;
  }
}

}  // namespace detail

inline SwapCount swap_pairs_for_gate(const Gate& g) {
  detail::require_nct(g);
  switch (g.kind()) {
    case GateKind::Not: return {0};
    case GateKind::Cnot:
    case GateKind::Swap: return {detail::two_line_pairs(g.controls()[0], g.target())};
    case GateKind::Toffoli:
      return {detail::toffoli_pairs(g.controls()[0], g.controls()[1], g.target())};
    case GateKind::Mct: break;
  }
  return {0};
}

inline SwapCount circuit_swap_pairs(const Circuit& c) {
  SwapCount total;
  for (const auto& g : c.gates()) total += swap_pairs_for_gate(g);
  return total;
}

/**
 * The adjacent swaps that bring `g` into nearest-neighbour position, in
 * execution order. Its length always equals swap_pairs_for_gate(g).pairs.
 *
 * Two-line gates: the lower line walks up next to the upper one.
 * Toffoli, target above both controls: c1 walks up to target+1, then c2 to
 * target+2 (or only c2 to c1+1 when c1 already touches the target).
 * Target between the controls: c1 walks down to target-1 and c2 up to target+1.
 * Target below both controls: mirror image of the first case.
 */
inline std::vector<std::pair<Line, Line>> setup_swaps(const Gate& g) {
  detail::require_nct(g);
  std::vector<std::pair<Line, Line>> out;
  if (g.kind() == GateKind::Not) return out;
  if (g.kind() != GateKind::Toffoli) {
    Line a = g.controls()[0], b = g.target();
    if (a > b) std::swap(a, b);
    detail::walk(b, a + 1, out, {});
    return out;
  }
  Line c1 = g.controls()[0], c2 = g.controls()[1], t = g.target();
  if (t < c1) {
    if (c1 - t > 1) {
      detail::walk(c1, t + 1, out, {&c2});
      detail::walk(c2, t + 2, out, {});
    } else if (c2 - c1 > 1) {
      detail::walk(c2, c1 + 1, out, {});
    }
  } else if (t < c2) {
    if (t - c1 > 1) detail::walk(c1, t - 1, out, {});
    if (c2 - t > 1) detail::walk(c2, t + 1, out, {});
  } else {
    if (t - c2 > 1) {
      detail::walk(c2, t - 1, out, {&c1});
      detail::walk(c1, t - 2, out, {});
    } else if (c2 - c1 > 1) {
      detail::walk(c1, c2 - 1, out, {});
    }
  }
  return out;
}

/**
 * Makes every gate act on adjacent lines: each gate needing s pairs is wrapped
 * in its s setup swaps and the same swaps mirrored afterwards. Gate count grows
 * by exactly 2 * circuit_swap_pairs(c).
 */
inline Circuit insert_swaps(const Circuit& c) {
  Circuit out(c.lines());
  std::vector<Line> pos(c.num_lines());
  for (const auto& g : c.gates()) {
    const auto swaps = setup_swaps(g);
    if (swaps.empty()) {
      out.add(g);
      continue;
    }
    for (Line i = 0; i < pos.size(); ++i) pos[i] = i;
    for (auto [a, b] : swaps) {
      out.add(Gate::swap(a, b));
      for (Line& p : pos) {
        if (p == a) p = b;
        else if (p == b) p = a;
      }
    }
    out.add(g.remapped([&](Line l) { return pos[l]; }));
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) out.add(Gate::swap(it->first, it->second));
  }
  return out;
}

enum class LnnMode {
  /// A gate is nearest-neighbour when the rule table asks for no pairs.
  RuleTable,
  /// Additionally require a Toffoli target to sit between its controls.
  Strict,
};

inline bool is_lnn_gate(const Gate& g, LnnMode mode = LnnMode::RuleTable) {
  switch (g.kind()) {
    case GateKind::Not: return true;
    case GateKind::Cnot:
    case GateKind::Swap: return detail::two_line_pairs(g.controls()[0], g.target()) == 0;
    case GateKind::Toffoli: {
      const Line c1 = g.controls()[0], c2 = g.controls()[1], t = g.target();
      if (mode == LnnMode::Strict) return c1 + 1 == t && t + 1 == c2;
      return detail::toffoli_pairs(c1, c2, t) == 0;
    }
    case GateKind::Mct: return false;
  }
  return false;
}

inline bool is_lnn(const Circuit& c, LnnMode mode = LnnMode::RuleTable) {
  for (const auto& g : c.gates())
    if (!is_lnn_gate(g, mode)) return false;
  return true;
}

}  // namespace lnn

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

// Multiple-controlled Toffoli to Toffoli-only rewriting (V-chain with clean
// ancillas).

#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "lnn/circuit.hpp"
#include "lnn/errors.hpp"

namespace lnn {

struct DecompositionPlan {
  std::size_t original_gate_index = 0;
  std::size_t controls = 0;
  std::vector<Line> ancillas_used;
  std::vector<Gate> emitted_gates;
};

inline std::size_t mct_toffoli_count(std::size_t controls) { return 2 * (controls - 2) + 1; }
inline std::size_t mct_ancilla_count(std::size_t controls) { return controls - 2; }

/**
 * Rewrites a C^kNOT (k >= 3) as 2(k-2)+1 Toffolis over k-2 ancillas taken from
 * the front of `ancilla_pool`.
 *
 * The ancillas must start in |0> and are returned to |0>. Controls are
 * consumed in ascending line order:
 *
 *   T(c1, c2 -> a1), T(c3, a1 -> a2), ..., T(ck, a_{k-2} -> target),
 *
 * followed by the compute cascade in reverse.
 */
inline DecompositionPlan plan_mct(const Gate& g, std::span<const Line> ancilla_pool,
                                  std::size_t gate_index = 0) {
  if (g.kind() != GateKind::Mct) {
    throw NotAnMctError(std::string(to_string(g.kind())) + " is not a multiple-controlled gate");
  }
  const std::size_t k = g.num_controls();
  const std::size_t need = mct_ancilla_count(k);
  if (ancilla_pool.size() < need) {
    throw CapacityError("C^" + std::to_string(k) + "NOT needs " + std::to_string(need) +
                        " ancillas, pool has " + std::to_string(ancilla_pool.size()));
  }
  const auto gate_lines = g.lines();
  std::unordered_set<Line> used(gate_lines.begin(), gate_lines.end());
  for (std::size_t i = 0; i < need; ++i) {
    if (!used.insert(ancilla_pool[i]).second) {
      throw std::invalid_argument("ancilla line " + std::to_string(ancilla_pool[i]) +
                                  " is repeated or touched by the gate");
    }
  }

  DecompositionPlan plan;
  plan.original_gate_index = gate_index;
  plan.controls = k;
  plan.ancillas_used.assign(ancilla_pool.begin(), ancilla_pool.begin() + need);

  const auto c = g.controls();
  const auto& a = plan.ancillas_used;
  std::vector<Gate> compute;
  compute.reserve(need);
  compute.push_back(Gate::toffoli(c[0], c[1], a[0]));
  for (std::size_t i = 2; i + 1 < k; ++i) compute.push_back(Gate::toffoli(c[i], a[i - 2], a[i - 1]));

  plan.emitted_gates = compute;
  plan.emitted_gates.push_back(Gate::toffoli(c[k - 1], a[need - 1], g.target()));
  plan.emitted_gates.insert(plan.emitted_gates.end(), compute.rbegin(), compute.rend());
  return plan;
}

inline std::vector<Gate> decompose_mct(const Gate& g, std::span<const Line> ancilla_pool) {
  return plan_mct(g, ancilla_pool).emitted_gates;
}

/// Number of ancilla lines decompose_circuit appends: max over gates of k-2.
inline std::size_t required_ancillas(const Circuit& c) {
  std::size_t need = 0;
  for (const auto& g : c.gates())
    if (g.kind() == GateKind::Mct) need = std::max(need, mct_ancilla_count(g.num_controls()));
  return need;
}

/**
 * Replaces every MCT gate by its Toffoli cascade. One shared block of
 * ancillas (sized for the widest gate) is appended below the original lines
 * as constant-0, non-garbage lines. Circuits without MCT gates come back
 * unchanged.
 */
inline Circuit decompose_circuit(const Circuit& c) {
  const std::size_t need = required_ancillas(c);
  if (need == 0) return c;

  std::vector<LineInfo> lines = c.lines();
  std::unordered_set<std::string> names;
  for (const auto& l : lines) names.insert(l.name);
  std::vector<Line> pool;
  for (std::size_t i = 0, serial = 0; i < need; ++i) {
    std::string name;
    do {
      name = "anc" + std::to_string(serial++);
    } while (names.contains(name));
    names.insert(name);
    pool.push_back(static_cast<Line>(lines.size()));
    lines.push_back(LineInfo{std::move(name), false, false});
  }

  Circuit out(std::move(lines));
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    if (g.kind() != GateKind::Mct) {
      out.add(g);
      continue;
    }
    for (auto& t : plan_mct(g, pool, i).emitted_gates) out.add(std::move(t));
  }
  return out;
}

}  // namespace lnn

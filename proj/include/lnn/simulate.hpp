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

// Computational-basis simulation and exhaustive equivalence checking.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lnn/circuit.hpp"
#include "lnn/errors.hpp"

namespace lnn {

inline constexpr std::size_t kDefaultSimulationGuard = 20;

/// Bit i is the value on line i.
struct BasisState {
  std::uint64_t bits = 0;

  bool operator[](Line line) const { return (bits >> line) & 1u; }
  bool operator==(const BasisState&) const = default;
};

/// Gates lowered to bit masks for fast repeated simulation.
class CompiledCircuit {
 public:
  explicit CompiledCircuit(const Circuit& c, std::size_t max_lines = kDefaultSimulationGuard)
      : num_lines_(c.num_lines()) {
    if (c.num_lines() > max_lines || c.num_lines() > 63) {
      throw CapacityError("simulation limited to " + std::to_string(max_lines) + " lines, circuit has " +
                          std::to_string(c.num_lines()));
    }
    ops_.reserve(c.gates().size());
    for (const auto& g : c.gates()) {
      Op op;
      op.swap = g.kind() == GateKind::Swap;
      for (Line l : g.controls()) op.controls |= std::uint64_t{1} << l;
      op.target = std::uint64_t{1} << g.target();
      ops_.push_back(op);
    }
  }

  std::size_t num_lines() const { return num_lines_; }

  BasisState run(BasisState in) const {
    std::uint64_t s = in.bits;
    for (const auto& op : ops_) {
      if (op.swap) {
        const bool a = (s & op.controls) != 0;
        const bool b = (s & op.target) != 0;
        if (a != b) s ^= op.controls | op.target;
      } else if ((s & op.controls) == op.controls) {
        s ^= op.target;
      }
    }
    return {s};
  }

 private:
  struct Op {
    std::uint64_t controls = 0;
    std::uint64_t target = 0;
    bool swap = false;
  };
  std::size_t num_lines_;
  std::vector<Op> ops_;
};

inline BasisState simulate(const Circuit& c, BasisState input,
                           std::size_t max_lines = kDefaultSimulationGuard) {
  return CompiledCircuit(c, max_lines).run(input);
}

struct EquivalenceOptions {
  /// Where each line of the reference lives in the candidate. The reference is
  /// implicitly padded with idle lines up to the candidate's width; padded
  /// lines are ancillas. Identity when absent.
  std::optional<LineOrdering> line_map;
  /// Reference-side lines (besides padding) held at 0 and left unchecked.
  std::set<Line> ancilla_lines;
  /// Padded lines must also come back as 0.
  bool require_clean_ancillas = true;
  std::size_t max_lines = kDefaultSimulationGuard;
};

/**
 * Exhaustive check that `candidate` computes the same function as
 * `reference` on every basis input with ancillas at 0.
 */
inline bool equivalent(const Circuit& reference, const Circuit& candidate,
                       const EquivalenceOptions& opts = {}) {
  const std::size_t width = candidate.num_lines();
  if (reference.num_lines() > width) {
    throw OrderingMismatch("candidate has fewer lines than the reference");
  }
  const LineOrdering map = opts.line_map.value_or(LineOrdering::identity(width));
  if (map.size() != width) {
    throw OrderingMismatch("line map has " + std::to_string(map.size()) + " entries for " +
                           std::to_string(width) + " candidate lines");
  }
  const CompiledCircuit ref(reference, opts.max_lines);
  const CompiledCircuit cand(candidate, opts.max_lines);

  std::vector<Line> free_lines;
  for (Line i = 0; i < reference.num_lines(); ++i)
    if (!opts.ancilla_lines.contains(i)) free_lines.push_back(i);

  std::uint64_t checked_mask = 0;
  for (Line i : free_lines) checked_mask |= std::uint64_t{1} << i;

  auto to_candidate = [&](std::uint64_t s) {
    std::uint64_t out = 0;
    for (Line i = 0; i < width; ++i)
      if ((s >> i) & 1u) out |= std::uint64_t{1} << map[i];
    return out;
  };

  std::uint64_t padding_mask = 0;
  if (opts.require_clean_ancillas)
    for (Line i = static_cast<Line>(reference.num_lines()); i < width; ++i) padding_mask |= std::uint64_t{1} << map[i];

  const std::uint64_t count = std::uint64_t{1} << free_lines.size();
  for (std::uint64_t x = 0; x < count; ++x) {
    std::uint64_t in = 0;
    for (std::size_t b = 0; b < free_lines.size(); ++b)
      if ((x >> b) & 1u) in |= std::uint64_t{1} << free_lines[b];
    const std::uint64_t expect = ref.run({in}).bits & checked_mask;
    const std::uint64_t got = cand.run({to_candidate(in)}).bits;
    if (to_candidate(expect) != (got & to_candidate(checked_mask))) return false;
    if (got & padding_mask) return false;
  }
  return true;
}

}  // namespace lnn

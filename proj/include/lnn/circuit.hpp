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
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lnn/errors.hpp"

namespace lnn {

/// Index of a qubit line. Line 0 is the topmost line.
using Line = std::uint32_t;

using Cost = std::int64_t;

enum class GateKind { Not, Cnot, Toffoli, Mct, Swap };

inline std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::Not: return "NOT";
    case GateKind::Cnot: return "CNOT";
    case GateKind::Toffoli: return "TOFFOLI";
    case GateKind::Mct: return "MCT";
    case GateKind::Swap: return "SWAP";
  }
  return "?";
}

/**
 * One reversible gate.
 *
 * Controls are kept sorted ascending, so for a Toffoli controls()[0] is always
 * the upper control line. A SWAP stores its lower line as the single control
 * and its upper line as the target; this makes gate equality canonical.
 */
class Gate {
 public:
  static Gate not_gate(Line target) { return Gate(GateKind::Not, {}, target); }
  static Gate cnot(Line control, Line target) {
    return Gate(GateKind::Cnot, {control}, target);
  }
  static Gate toffoli(Line control1, Line control2, Line target) {
    return Gate(GateKind::Toffoli, {control1, control2}, target);
  }
  static Gate mct(std::vector<Line> controls, Line target) {
    return Gate(GateKind::Mct, std::move(controls), target);
  }
  static Gate swap(Line a, Line b) {
    if (a == b) throw std::invalid_argument("SWAP needs two distinct lines");
    return Gate(GateKind::Swap, {std::min(a, b)}, std::max(a, b));
  }
  /// Picks NOT / CNOT / TOFFOLI / MCT from the number of controls.
  static Gate controlled_not(std::vector<Line> controls, Line target) {
    GateKind kind = GateKind::Mct;
    switch (controls.size()) {
      case 0: kind = GateKind::Not; break;
      case 1: kind = GateKind::Cnot; break;
      case 2: kind = GateKind::Toffoli; break;
      default: break;
    }
    return Gate(kind, std::move(controls), target);
  }

  GateKind kind() const { return kind_; }
  std::span<const Line> controls() const { return controls_; }
  std::size_t num_controls() const { return controls_.size(); }
  Line target() const { return target_; }

  /// Every line the gate touches: controls (ascending) followed by the target.
  std::vector<Line> lines() const {
    std::vector<Line> out(controls_.begin(), controls_.end());
    out.push_back(target_);
    return out;
  }

  /// Same gate kind with every line index rewritten through `map`.
  template <typename Map>
  Gate remapped(Map&& map) const {
    if (kind_ == GateKind::Swap) return swap(map(controls_[0]), map(target_));
    std::vector<Line> controls;
    controls.reserve(controls_.size());
    for (Line c : controls_) controls.push_back(map(c));
    return Gate(kind_, std::move(controls), map(target_));
  }

  bool operator==(const Gate&) const = default;

 private:
  Gate(GateKind kind, std::vector<Line> controls, Line target)
      : kind_(kind), controls_(std::move(controls)), target_(target) {
    std::sort(controls_.begin(), controls_.end());
    const std::size_t k = controls_.size();
    bool arity_ok = false;
    switch (kind_) {
      case GateKind::Not: arity_ok = k == 0; break;
      case GateKind::Cnot: arity_ok = k == 1; break;
      case GateKind::Toffoli: arity_ok = k == 2; break;
      case GateKind::Mct: arity_ok = k >= 3; break;
      case GateKind::Swap: arity_ok = k == 1; break;
    }
    if (!arity_ok) {
      throw std::invalid_argument(std::string(to_string(kind_)) + " gate with " +
                                  std::to_string(k) + " controls");
    }
    if (std::adjacent_find(controls_.begin(), controls_.end()) != controls_.end() ||
        std::binary_search(controls_.begin(), controls_.end(), target_)) {
      throw std::invalid_argument("gate references the same line twice");
    }
  }

  GateKind kind_;
  std::vector<Line> controls_;
  Line target_;
};

struct LineSpan {
  Line min;
  Line max;
  bool operator==(const LineSpan&) const = default;
};

inline LineSpan gate_span(const Gate& g) {
  Line lo = g.target();
  Line hi = g.target();
  for (Line c : g.controls()) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  return {lo, hi};
}

struct LineInfo {
  std::string name;
  std::optional<bool> constant_input;
  bool garbage_output = false;

  bool operator==(const LineInfo&) const = default;
};

/// Ordered gate list over a fixed set of named lines.
class Circuit {
 public:
  /// `num_lines` lines named x0, x1, ...
  explicit Circuit(std::size_t num_lines) : Circuit(default_lines(num_lines)) {}

  explicit Circuit(std::vector<LineInfo> lines) : lines_(std::move(lines)) {
    if (lines_.empty()) throw std::invalid_argument("a circuit needs at least one line");
    std::unordered_set<std::string_view> seen;
    for (const auto& l : lines_) {
      if (l.name.empty()) throw std::invalid_argument("empty line name");
      if (!seen.insert(l.name).second) {
        throw std::invalid_argument("duplicate line name '" + l.name + "'");
      }
    }
  }

  Circuit(std::vector<LineInfo> lines, std::vector<Gate> gates)
      : Circuit(std::move(lines)) {
    gates_.reserve(gates.size());
    for (auto& g : gates) add(std::move(g));
  }

  Circuit& add(Gate g) {
    if (gate_span(g).max >= lines_.size()) {
      throw std::out_of_range("gate references line " + std::to_string(gate_span(g).max) +
                              " in a " + std::to_string(lines_.size()) + "-line circuit");
    }
    gates_.push_back(std::move(g));
    return *this;
  }

  std::size_t num_lines() const { return lines_.size(); }
  const std::vector<LineInfo>& lines() const { return lines_; }
  const std::vector<Gate>& gates() const { return gates_; }

  bool operator==(const Circuit&) const = default;

  static std::vector<LineInfo> default_lines(std::size_t n) {
    std::vector<LineInfo> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].name = "x" + std::to_string(i);
    return out;
  }

 private:
  std::vector<LineInfo> lines_;
  std::vector<Gate> gates_;
};

/// Permutation of line indices: `ordering[i]` is the new index of original line i.
class LineOrdering {
 public:
  static LineOrdering identity(std::size_t n) {
    std::vector<Line> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Line>(i);
    return LineOrdering(std::move(perm));
  }

  explicit LineOrdering(std::vector<Line> perm) : perm_(std::move(perm)) {
    std::vector<bool> hit(perm_.size(), false);
    for (Line p : perm_) {
      if (p >= perm_.size() || hit[p]) {
        throw std::invalid_argument("line ordering is not a permutation");
      }
      hit[p] = true;
    }
  }

  std::size_t size() const { return perm_.size(); }
  Line operator[](Line original) const { return perm_.at(original); }
  std::span<const Line> positions() const { return perm_; }

  LineOrdering inverse() const {
    std::vector<Line> inv(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = static_cast<Line>(i);
    return LineOrdering(std::move(inv));
  }

  /// `next` after `*this`: original line i goes to next[(*this)[i]].
  LineOrdering then(const LineOrdering& next) const {
    if (next.size() != size()) throw OrderingMismatch("composing orderings of different sizes");
    std::vector<Line> out(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) out[i] = next.perm_[perm_[i]];
    return LineOrdering(std::move(out));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i)
      if (perm_[i] != i) return false;
    return true;
  }

  bool operator==(const LineOrdering&) const = default;

 private:
  std::vector<Line> perm_;
};

/// Remaps every gate through `ordering` and moves line metadata to its new slot.
/// Gate order is unchanged.
inline Circuit apply_ordering(const Circuit& c, const LineOrdering& ordering) {
  if (ordering.size() != c.num_lines()) {
    throw OrderingMismatch("ordering has " + std::to_string(ordering.size()) +
                           " entries for a " + std::to_string(c.num_lines()) + "-line circuit");
  }
  std::vector<LineInfo> lines(c.num_lines());
  for (Line i = 0; i < c.num_lines(); ++i) lines[ordering[i]] = c.lines()[i];
  Circuit out(std::move(lines));
  for (const auto& g : c.gates()) out.add(g.remapped([&](Line l) { return ordering[l]; }));
  return out;
}

/// Per-gate quantum costs. A multiple-controlled gate with k controls is charged
/// as the 2(k-2)+1 Toffolis its ancilla decomposition needs.
struct CostModel {
  Cost not_cost = 1;
  Cost cnot_cost = 1;
  Cost swap_cost = 3;
  Cost toffoli_cost = 5;

  Cost mct_cost(std::size_t controls) const {
    return toffoli_cost * static_cast<Cost>(2 * (controls - 2) + 1);
  }

  Cost gate_cost(const Gate& g) const {
    switch (g.kind()) {
      case GateKind::Not: return not_cost;
      case GateKind::Cnot: return cnot_cost;
      case GateKind::Toffoli: return toffoli_cost;
      case GateKind::Mct: return mct_cost(g.num_controls());
      case GateKind::Swap: return swap_cost;
    }
    return 0;
  }
};

inline Cost quantum_cost(const Circuit& c, const CostModel& model = {}) {
  Cost total = 0;
  for (const auto& g : c.gates()) total += model.gate_cost(g);
  return total;
}

}  // namespace lnn

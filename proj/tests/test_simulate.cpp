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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lnn/decompose.hpp"
#include "lnn/metrics.hpp"
#include "lnn/simulate.hpp"
#include "oracles.hpp"

using namespace lnn;

TEST_CASE("basis-state semantics", "[simulate]") {
  Circuit t(3);
  t.add(Gate::toffoli(0, 1, 2));
  CHECK(simulate(t, {0b011}).bits == 0b111);
  CHECK(simulate(t, {0b001}).bits == 0b001);

  Circuit s(2);
  s.add(Gate::swap(0, 1));
  CHECK(simulate(s, {0b01}).bits == 0b10);

  Circuit cc(2);
  cc.add(Gate::cnot(0, 1)).add(Gate::cnot(0, 1));
  for (std::uint64_t x = 0; x < 4; ++x) CHECK(simulate(cc, {x}).bits == x);

  Circuit m(5);
  m.add(Gate::mct({0, 1, 3, 4}, 2));
  CHECK(simulate(m, {0b11011}).bits == 0b11111);
  CHECK(simulate(m, {0b01011}).bits == 0b01011);
}

TEST_CASE("simulation guard", "[simulate]") {
  CHECK_THROWS_AS(simulate(Circuit(21), {0}), CapacityError);
  CHECK_NOTHROW(simulate(Circuit(21), {0}, 21));
  CHECK_THROWS_AS(simulate(Circuit(64), {0}, 100), CapacityError);
}

TEST_CASE("simulator agrees with the bit-vector oracle and is reversible", "[simulate][property]") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = oracle::random_circuit(rng, {.min_lines = 1, .max_lines = 12, .swaps = true, .mct = true});
    const CompiledCircuit compiled(c);
    const std::uint64_t n = std::uint64_t{1} << c.num_lines();
    std::vector<bool> hit(n, false);
    for (std::uint64_t x = 0; x < n; ++x) {
      const std::uint64_t y = compiled.run({x}).bits;
      REQUIRE(y == oracle::value_of(oracle::evaluate(c, oracle::bits_of(x, c.num_lines()))));
      REQUIRE_FALSE(hit[y]);
      hit[y] = true;
    }
  }
}

TEST_CASE("equivalence checks", "[simulate]") {
  Circuit c(4);
  c.add(Gate::toffoli(0, 1, 3)).add(Gate::cnot(3, 2)).add(Gate::not_gate(1));

  SECTION("relabelling with the matching line map") {
    const LineOrdering p({3, 1, 0, 2});
    EquivalenceOptions opts;
    opts.line_map = p;
    CHECK(equivalent(c, apply_ordering(c, p), opts));
    CHECK_FALSE(equivalent(c, apply_ordering(c, p)));
  }
  SECTION("swap insertion") {
    CHECK(equivalent(c, insert_swaps(c)));
  }
  SECTION("dropping a gate is detected") {
    for (std::size_t drop = 0; drop < c.gates().size(); ++drop) {
      Circuit d(4);
      for (std::size_t i = 0; i < c.gates().size(); ++i)
        if (i != drop) d.add(c.gates()[i]);
      CHECK_FALSE(equivalent(c, d));
    }
  }
  SECTION("padded ancillas are held at zero") {
    Circuit m(5);
    m.add(Gate::mct({0, 1, 2, 3}, 4));
    const Circuit d = decompose_circuit(m);
    CHECK(equivalent(m, d));
    // Garbage left on an ancilla makes the check fail.
    Circuit dirty = d;
    dirty.add(Gate::cnot(0, 5));
    CHECK_FALSE(equivalent(m, dirty));
  }
  SECTION("reference-side ancilla lines are not enumerated") {
    Circuit a(3), b(3);
    a.add(Gate::toffoli(0, 1, 2));
    b.add(Gate::toffoli(0, 1, 2)).add(Gate::cnot(2, 1));  // differs only when line 2 starts at 1
    EquivalenceOptions opts;
    opts.ancilla_lines = {2};
    CHECK_FALSE(equivalent(a, b));
    CHECK_FALSE(equivalent(a, b, opts));  // 0,1 set: line 2 becomes 1 and flips line 1
    Circuit b2(3);
    b2.add(Gate::cnot(2, 1)).add(Gate::toffoli(0, 1, 2));
    CHECK(equivalent(a, b2, opts));
  }
  SECTION("mismatched widths") {
    CHECK_THROWS_AS(equivalent(c, Circuit(3)), OrderingMismatch);
    EquivalenceOptions opts;
    opts.line_map = LineOrdering::identity(3);
    CHECK_THROWS_AS(equivalent(c, c, opts), OrderingMismatch);
  }
}

TEST_CASE("every pipeline stage preserves the function", "[simulate][property]") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = oracle::random_circuit(rng, {.min_lines = 4, .mct = true});
    const Circuit d = decompose_circuit(c);
    REQUIRE(equivalent(c, d));
    std::vector<Line> perm(d.num_lines());
    std::iota(perm.begin(), perm.end(), Line{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const LineOrdering p(perm);
    const Circuit routed = insert_swaps(apply_ordering(d, p));
    EquivalenceOptions opts;
    opts.line_map = p;
    REQUIRE(equivalent(c, routed, opts));
  }
}

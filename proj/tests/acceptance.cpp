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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lnn/lnn.hpp"
#include "oracles.hpp"

using namespace lnn;

namespace {

const std::filesystem::path kFixtures{LNN_FIXTURE_DIR};

/// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failures_.push_back(os.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }
  std::string note;

 private:
  std::vector<std::string> failures_;
};

int failed = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check check;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    check.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  }
  const bool ok = check.failures().empty();
  failed += !ok;
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              check.note.empty() ? "" : " ", check.note.c_str());
  for (const auto& f : check.failures()) std::printf("    %s\n", f.c_str());
}

Circuit load(const std::string& name) {
  return decompose_circuit(read_real_file(kFixtures / (name + ".real")).circuit);
}

Cost pairs_under(const Circuit& c, const LineOrdering& o) { return circuit_swap_pairs(apply_ordering(c, o)).pairs; }

Cost exhaustive_pairs(const Circuit& c) { return pairs_under(c, best_ordering_exhaustive(build_graph(c), c)); }

}  // namespace

int main() {
  criterion(1, "SWAP-pair rule table on the four-line Toffoli", 1.0, [](Check& ck) {
    const SwapCount s = swap_pairs_for_gate(Gate::toffoli(0, 1, 3));
    ck.equal(s.pairs, 2, "Toffoli(0,1 -> 3) pairs");
    ck.equal(s.swap_gates(), 4, "Toffoli(0,1 -> 3) SWAP gates");
    Circuit c(4);
    c.add(Gate::toffoli(0, 1, 3));
    ck.equal(insert_swaps(c).gates().size() - 1, 4u, "SWAP gates inserted");
    const ReorderResult r = reorder_pipeline(c);
    ck.equal(r.after.pairs, 0, "pairs after reordering");
    ck.equal(circuit_swap_pairs(r.reordered).pairs, 0, "pairs of the reordered circuit");
  });

  criterion(2, "label ordering rule", 1.0, [](Check& ck) {
    const LineOrdering o = order_from_labels({{2, 1, 1, 3, 2, 4}, 5});
    ck.expect(o == LineOrdering({2, 0, 1, 4, 3, 5}), "order_from_labels([2,1,1,3,2,4]) != [2,0,1,4,3,5]");
  });

  criterion(3, "MCT decomposition law and clean-ancilla simulation", 10.0, [](Check& ck) {
    for (std::size_t k = 3; k <= 8; ++k) {
      const std::size_t n = 2 * k - 1;
      std::vector<Line> controls(k), pool(k - 2);
      std::iota(controls.begin(), controls.end(), Line{0});
      std::iota(pool.begin(), pool.end(), Line(k + 1));
      const Gate g = Gate::mct(controls, Line(k));
      const DecompositionPlan plan = plan_mct(g, pool);
      std::size_t toffolis = 0;
      for (const auto& t : plan.emitted_gates) toffolis += t.kind() == GateKind::Toffoli;
      const std::string kk = "k=" + std::to_string(k);
      ck.equal(plan.emitted_gates.size(), 2 * (k - 2) + 1, kk + " gates");
      ck.equal(toffolis, 2 * (k - 2) + 1, kk + " Toffolis");
      ck.equal(plan.ancillas_used.size(), k - 2, kk + " ancillas");
      if (k > 6) continue;
      Circuit cascade(n), reference(n);
      for (const auto& t : plan.emitted_gates) cascade.add(t);
      reference.add(g);
      // Every input with the ancillas at 0; outputs must match bit for bit,
      // ancillas included.
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << (k + 1)); ++x) {
        const auto in = oracle::bits_of(x, n);
        if (oracle::evaluate(cascade, in) != oracle::evaluate(reference, in)) {
          ck.expect(false, kk + " differs on input " + std::to_string(x));
          break;
        }
      }
      ck.expect(equivalent(reference, cascade, {.ancilla_lines = {pool.begin(), pool.end()}}),
                kk + " equivalence check");
    }
  });

  criterion(4, "4mod5-bdd_287: 15 pairs before, at most 10 after", 30.0, [](Check& ck) {
    const Circuit c = load("4mod5-bdd_287");
    ck.equal(c.num_lines(), 7u, "lines");
    ck.equal(c.gates().size(), 8u, "gates");
    const ReorderResult r = reorder_pipeline(c);
    ck.equal(r.before.pairs, 15, "pairs before");
    ck.expect(r.after.pairs <= 10, "pipeline pairs after = " + std::to_string(r.after.pairs));
    const Cost best = exhaustive_pairs(c);
    ck.expect(best <= 10, "exhaustive optimum = " + std::to_string(best));
    ck.note = "[pipeline " + std::to_string(r.after.pairs) + ", oracle " + std::to_string(best) + " pairs]";
  });

  criterion(5, "pinned benchmark rows", 60.0, [](Check& ck) {
    struct Row {
      std::string name;
      Cost before;
      std::optional<Cost> after;  // published total after reordering, when pinned exactly
    };
    const std::vector<Row> rows{{"3_17_13", 20, 14}, {"hwb4_52", 65, {}}, {"4mod5-v1_23", 108, {}},
                                {"decod24-v3_46", 63, 21}};
    std::string note;
    for (const auto& row : rows) {
      const CostReport r = run_file(kFixtures / (row.name + ".real"));
      const auto ref = find_reference(row.name);
      ck.expect(ref.has_value(), row.name + " has no published row");
      ck.equal(r.total_before(), row.before, row.name + " total before");
      if (row.after) ck.equal(r.total_after(), *row.after, row.name + " total after");
      const Circuit c = load(row.name);
      const Cost best = exhaustive_pairs(c);
      const Cost best_total = r.base_qc + 6 * best;
      if (ref) ck.expect(best_total <= ref->total_after, row.name + " oracle total " + std::to_string(best_total) +
                                                             " above published " + std::to_string(ref->total_after));
      ck.expect(r.pairs_after.pairs - best <= 2, row.name + " heuristic " + std::to_string(r.pairs_after.pairs) +
                                                     " pairs vs oracle " + std::to_string(best));
      ck.expect(r.verification == Verification::Passed, row.name + " verification");
      note += " " + row.name + "=" + std::to_string(r.pairs_after.pairs) + "/" + std::to_string(best);
    }
    ck.equal(run_file(kFixtures / "3_17_13.real").pairs_after.pairs, 0, "3_17_13 pairs after");
    ck.note = "[heuristic/oracle pairs:" + note + "]";
  });

  criterion(6, "random NCT circuits against the exhaustive oracle", 300.0, [](Check& ck) {
    std::mt19937_64 rng(2026);
    const int n = 200;
    int no_worse = 0;
    for (int i = 0; i < n; ++i) {
      const Circuit c = oracle::random_circuit(rng, {.min_lines = 3, .max_lines = 8, .max_gates = 25});
      const ReorderResult r = reorder_pipeline(c);
      const Cost best = exhaustive_pairs(c);
      const std::string id = "circuit " + std::to_string(i);
      ck.expect(r.after.pairs >= best, id + ": heuristic below the oracle");
      no_worse += r.after <= r.before;
      const Circuit before = insert_swaps(c);
      const Circuit after = insert_swaps(r.reordered);
      ck.expect(is_lnn(before) && is_lnn(after), id + ": not LNN after SWAP insertion");
      ck.expect(equivalent(c, before), id + ": SWAP insertion changed the function");
      ck.expect(equivalent(c, after, {.line_map = r.ordering}), id + ": reordered circuit changed the function");
    }
    ck.expect(no_worse * 100 >= 80 * n, "heuristic no worse than identity in only " + std::to_string(no_worse) +
                                            "/" + std::to_string(n));
    ck.note = "[no worse than identity in " + std::to_string(no_worse) + "/" + std::to_string(n) + "]";
  });

  criterion(7, "parse/write round trip", 10.0, [](Check& ck) {
    std::size_t fixtures = 0;
    for (const auto& e : std::filesystem::directory_iterator(kFixtures)) {
      const Circuit c = read_real_file(e.path()).circuit;
      ck.expect(parse_real(write_real(c)) == c, e.path().filename().string());
      ++fixtures;
    }
    ck.expect(fixtures >= 5, "fewer than five fixtures");
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
      const Circuit c = oracle::random_circuit(rng, {.min_lines = 1, .max_lines = 12, .swaps = true, .mct = true});
      if (!(parse_real(write_real(c)) == c)) {
        ck.expect(false, "random circuit " + std::to_string(i));
        break;
      }
    }
  });

  criterion(8, "average reduction on the pinned suite above 20%", 300.0, [](Check& ck) {
    const SuiteReport suite = run_suite(kFixtures);
    ck.equal(suite.entries.size(), 5u, "suite size");
    ck.expect(!suite.any_failure(), "suite reported a failure");
    const auto avg = suite.average_reduction_pct();
    ck.expect(avg && *avg > 20.0, "average reduction " + (avg ? std::to_string(*avg) : std::string("n/a")));
    if (avg) ck.note = "[average " + std::to_string(*avg) + "%]";
  });

  std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}

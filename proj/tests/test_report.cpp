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

#include <filesystem>
#include <fstream>

#include "lnn/report.hpp"

using namespace lnn;

namespace {

const std::filesystem::path kFixtures{LNN_FIXTURE_DIR};

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag)
      : path(std::filesystem::temp_directory_path() / ("lnn-test-" + tag)) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("pinned rows before reordering", "[report]") {
  const std::vector<std::pair<std::string, Cost>> rows{
      {"3_17_13", 20}, {"hwb4_52", 65}, {"4mod5-v1_23", 108}, {"decod24-v3_46", 63}, {"4mod5-bdd_287", 114}};
  for (const auto& [name, total] : rows) {
    const CostReport r = run_file(kFixtures / (name + ".real"));
    INFO(name);
    CHECK(r.total_before() == total);
    CHECK_FALSE(r.reference_mismatch());
    CHECK(r.verification == Verification::Passed);
  }
  const CostReport r = run_file(kFixtures / "3_17_13.real");
  CHECK(r.base_qc == 14);
  CHECK(r.total_after() == 14);
  CHECK(r.reduction_pct() == Catch::Approx(30.0));
}

TEST_CASE("report arithmetic", "[report]") {
  for (auto strategy : {OrderStrategy::Recursive, OrderStrategy::Labels, OrderStrategy::Exhaustive}) {
    ReportOptions opts;
    opts.reorder.strategy = strategy;
    const SuiteReport suite = run_suite(kFixtures, opts);
    REQUIRE(suite.entries.size() == 5);
    for (const auto& e : suite.entries) {
      REQUIRE(e.report);
      const CostReport& r = *e.report;
      CHECK(r.total_before() == r.base_qc + 6 * r.pairs_before.pairs);
      CHECK(r.total_after() == r.base_qc + 6 * r.pairs_after.pairs);
      CHECK(r.reduction_pct() ==
            Catch::Approx(100.0 * double(r.total_before() - r.total_after()) / double(r.total_before())));
    }
  }
}

TEST_CASE("circuit without gates reports zeros", "[report]") {
  const RealDocument doc = parse_real_document(".version 1.0\n.numvars 2\n.variables a b\n.begin\n.end\n");
  const CostReport r = run_circuit("empty", doc);
  CHECK(r.gates == 0);
  CHECK(r.base_qc == 0);
  CHECK(r.total_before() == 0);
  CHECK(r.total_after() == 0);
  CHECK(r.reduction_pct() == 0.0);
  CHECK_FALSE(r.reference.has_value());
}

TEST_CASE("MCT circuits are decomposed before counting", "[report]") {
  const RealDocument doc = parse_real_document(
      ".version 1.0\n.numvars 5\n.variables a b c d e\n.begin\nt5 a b c d e\nt2 a e\n.end\n");
  const CostReport r = run_circuit("mct", doc);
  CHECK(r.lines == 5);
  CHECK(r.lines_decomposed == 7);
  CHECK(r.gates_decomposed == 6);
  CHECK(r.base_qc == 26);
  CHECK(r.verification == Verification::Passed);
}

TEST_CASE("verification is skipped above the guard", "[report]") {
  ReportOptions opts;
  opts.verify_max_lines = 4;
  const CostReport r = run_file(kFixtures / "4mod5-bdd_287.real", opts);
  CHECK(r.verification == Verification::Skipped);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("skipped") != std::string::npos);
}

TEST_CASE("emitted LNN circuits", "[report]") {
  TempDir dir("emit");
  ReportOptions opts;
  opts.emit_lnn_dir = dir.path;
  const CostReport r = run_file(kFixtures / "decod24-v3_46.real", opts);
  const Circuit before = read_real_file(dir.path / "decod24-v3_46.lnn-before.real").circuit;
  const Circuit after = read_real_file(dir.path / "decod24-v3_46.lnn-after.real").circuit;
  CHECK(is_lnn(before));
  CHECK(is_lnn(after));
  CHECK(before.gates().size() == r.gates + 2 * r.pairs_before.pairs);
  CHECK(after.gates().size() == r.gates + 2 * r.pairs_after.pairs);
}

TEST_CASE("suite output", "[report]") {
  SECTION("CSV is reproducible and parallel runs match") {
    ReportOptions parallel;
    parallel.jobs = 4;
    const std::string a = to_csv(run_suite(kFixtures));
    CHECK(a == to_csv(run_suite(kFixtures)));
    CHECK(a == to_csv(run_suite(kFixtures, parallel)));
    CHECK(a.rfind("circuit,lines,", 0) == 0);
    CHECK(a.find("# average_reduction_pct,") != std::string::npos);
  }
  SECTION("empty directory") {
    TempDir dir("empty");
    const SuiteReport suite = run_suite(dir.path);
    CHECK(suite.entries.empty());
    CHECK_FALSE(suite.average_reduction_pct().has_value());
    CHECK(to_csv(suite).find("# average_reduction_pct,n/a") != std::string::npos);
    CHECK(to_markdown(suite).find("n/a") != std::string::npos);
  }
  SECTION("bad files become error rows and the run continues") {
    TempDir dir("bad");
    std::ofstream(dir.path / "a_bad.real") << ".version 1.0\n.numvars 1\n.variables a\n.begin\nt2 a a\n.end\n";
    std::filesystem::copy_file(kFixtures / "3_17_13.real", dir.path / "b_ok.real");
    const SuiteReport suite = run_suite(dir.path);
    REQUIRE(suite.entries.size() == 2);
    CHECK_FALSE(suite.entries[0].report.has_value());
    CHECK(suite.entries[0].error.find("line 5") != std::string::npos);
    CHECK(suite.entries[1].report.has_value());
    CHECK(suite.any_failure());
    const std::string csv = to_csv(suite);
    const auto first_row = csv.substr(csv.find('\n') + 1);
    const auto row = first_row.substr(0, first_row.find('\n'));
    CHECK(std::count(row.begin(), row.end(), ',') == std::count(csv.begin(), csv.begin() + csv.find('\n'), ','));
  }
}

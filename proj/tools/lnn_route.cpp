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

// lnn-route: SWAP-cost reports for RevLib circuits.
//
// Exit codes: 0 success, 1 parse or verification failure, 2 bad arguments.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "lnn/lnn.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int run_report(const std::string& target, lnn::ReportOptions opts, const std::string& format,
               bool timings, const std::string& output) {
  if (!std::filesystem::exists(target)) {
    std::cerr << "lnn-route: no such file or directory: " << target << '\n';
    return kExitUsage;
  }
  const lnn::SuiteReport suite = lnn::run_suite(target, opts);
  for (const auto& e : suite.entries) {
    if (!e.report) {
      std::cerr << "error: " << e.error << '\n';
      continue;
    }
    for (const auto& w : e.report->warnings) std::cerr << "warning: " << e.report->circuit << ": " << w << '\n';
    if (e.report->verification == lnn::Verification::Failed) {
      std::cerr << "error: " << e.report->circuit << ": equivalence check FAILED\n";
    }
  }
  const std::string text = format == "md" ? lnn::to_markdown(suite, timings) : lnn::to_csv(suite, timings);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream(output) << text;
  }
  return suite.any_failure() ? kExitFailure : 0;
}

int run_graph(const std::string& file, bool decompose) {
  const lnn::RealDocument doc = lnn::read_real_file(file);
  const lnn::Circuit c = decompose ? lnn::decompose_circuit(doc.circuit) : doc.circuit;
  std::cout << lnn::to_adjacency_text(lnn::build_graph(c));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear nearest-neighbour SWAP cost analysis for reversible circuits"};
  app.require_subcommand(1);

  auto* report = app.add_subcommand("report", "Cost report for a .real file or a directory of them");
  std::string target;
  std::string order = "recursive";
  std::uint64_t seed = 0;
  bool weighted_cut = true;
  bool keep_best = false;
  std::string emit_dir;
  std::size_t verify_max_lines = lnn::kDefaultSimulationGuard;
  std::string format = "csv";
  std::uint32_t parts = 0;
  unsigned jobs = 1;
  bool timings = false;
  std::string output;
  report->add_option("target", target, "File or directory")->required();
  report->add_option("--order", order, "Ordering strategy")
      ->check(CLI::IsMember({"recursive", "labels", "exhaustive", "identity"}));
  report->add_option("--seed", seed, "Seed for randomised partitioning");
  report->add_option("--weighted-cut", weighted_cut, "Use edge weights in the cut objective");
  report->add_flag("--keep-best", keep_best, "Keep the original order when reordering is worse");
  report->add_option("--emit-lnn", emit_dir, "Write LNN circuits (before/after) to this directory");
  report->add_option("--verify-max-lines", verify_max_lines,
                     "Largest circuit (after decomposition) checked for equivalence");
  report->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "md"}));
  report->add_option("--parts", parts, "Parts for the labels strategy (0 = one per line)");
  report->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  report->add_flag("--timings", timings, "Add wall-clock column (output no longer reproducible)");
  report->add_option("-o,--output", output, "Write the table here instead of stdout");

  auto* graph = app.add_subcommand("graph", "Dump the qubit line adjacency graph");
  std::string graph_file;
  bool no_decompose = false;
  graph->add_option("file", graph_file, ".real file")->required()->check(CLI::ExistingFile);
  graph->add_flag("--no-decompose", no_decompose, "Use the circuit as written (fails on MCT gates)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*report) {
      lnn::ReportOptions opts;
      opts.reorder.strategy = *lnn::parse_order_strategy(order);
      opts.reorder.partition.seed = seed;
      opts.reorder.partition.weighted_cut = weighted_cut;
      opts.reorder.keep_best = keep_best;
      opts.reorder.parts = parts;
      if (!emit_dir.empty()) opts.emit_lnn_dir = emit_dir;
      opts.verify_max_lines = verify_max_lines;
      opts.jobs = jobs;
      return run_report(target, opts, format, timings, output);
    }
    return run_graph(graph_file, !no_decompose);
  } catch (const std::exception& e) {
    std::cerr << "lnn-route: " << e.what() << '\n';
    return kExitFailure;
  }
}

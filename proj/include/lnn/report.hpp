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

// Benchmark driver: parse -> decompose -> count -> reorder -> count, with
// optional LNN output and equivalence checking, and CSV / Markdown tables.

#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lnn/circuit.hpp"
#include "lnn/decompose.hpp"
#include "lnn/metrics.hpp"
#include "lnn/ordering.hpp"
#include "lnn/reference.hpp"
#include "lnn/revlib.hpp"
#include "lnn/simulate.hpp"

namespace lnn {

struct ReportOptions {
  ReorderOptions reorder;
  std::optional<std::filesystem::path> emit_lnn_dir;
  std::size_t verify_max_lines = kDefaultSimulationGuard;
  /// Worker threads for run_suite.
  unsigned jobs = 1;
};

enum class Verification { Passed, Failed, Skipped };

inline std::string_view to_string(Verification v) {
  switch (v) {
    case Verification::Passed: return "passed";
    case Verification::Failed: return "FAILED";
    case Verification::Skipped: return "skipped";
  }
  return "?";
}

struct CostReport {
  std::string circuit;
  std::size_t lines = 0;
  std::size_t lines_decomposed = 0;
  std::size_t gates = 0;
  std::size_t gates_decomposed = 0;
  Cost base_qc = 0;
  std::optional<Cost> annotated_qc;
  SwapCount pairs_before;
  SwapCount pairs_after;
  LineOrdering ordering = LineOrdering::identity(0);
  OrderStrategy strategy = OrderStrategy::Recursive;
  std::uint64_t seed = 0;
  Verification verification = Verification::Skipped;
  std::vector<std::string> warnings;
  double wall_ms = 0.0;
  std::optional<ReferenceRow> reference;

  Cost swap_cost_before() const { return pairs_before.swap_quantum_cost(); }
  Cost swap_cost_after() const { return pairs_after.swap_quantum_cost(); }
  Cost total_before() const { return base_qc + swap_cost_before(); }
  Cost total_after() const { return base_qc + swap_cost_after(); }

  /// 100 * (before - after) / before on total quantum cost; 0 when before is 0.
  double reduction_pct() const {
    if (total_before() == 0) return 0.0;
    return 100.0 * static_cast<double>(total_before() - total_after()) /
           static_cast<double>(total_before());
  }

  /// True when a published row exists and disagrees on N, GC or the
  /// rule-determined total before reordering.
  bool reference_mismatch() const {
    return reference && (reference->lines != static_cast<std::int64_t>(lines) ||
                         reference->gates != static_cast<std::int64_t>(gates) ||
                         reference->total_before != total_before());
  }
};

/// A failure tied to one input file.
class FileError : public Error {
 public:
  FileError(const std::filesystem::path& path, const std::string& what)
      : Error(path.string() + ": " + what), path_(path) {}
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline CostReport run_circuit(const std::string& name, const RealDocument& doc,
                              const ReportOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  const Circuit& original = doc.circuit;
  CostReport r;
  r.circuit = name;
  r.lines = original.num_lines();
  r.gates = original.gates().size();
  r.annotated_qc = doc.header.annotated_cost;
  r.strategy = opts.reorder.strategy;
  r.seed = opts.reorder.partition.seed;
  r.reference = find_reference(name);

  const Circuit decomposed = decompose_circuit(original);
  r.lines_decomposed = decomposed.num_lines();
  r.gates_decomposed = decomposed.gates().size();
  r.base_qc = quantum_cost(decomposed);

  ReorderResult res = reorder_pipeline(decomposed, opts.reorder);
  r.pairs_before = res.before;
  r.pairs_after = res.after;
  r.ordering = res.ordering;

  const bool verify = decomposed.num_lines() <= opts.verify_max_lines;
  if (opts.emit_lnn_dir || verify) {
    const Circuit lnn_before = insert_swaps(decomposed);
    const Circuit lnn_after = insert_swaps(res.reordered);
    if (opts.emit_lnn_dir) {
      std::filesystem::create_directories(*opts.emit_lnn_dir);
      std::ofstream(*opts.emit_lnn_dir / (name + ".lnn-before.real")) << write_real(lnn_before);
      std::ofstream(*opts.emit_lnn_dir / (name + ".lnn-after.real")) << write_real(lnn_after);
    }
    if (verify) {
      EquivalenceOptions eq;
      eq.max_lines = opts.verify_max_lines;
      bool ok = is_lnn(lnn_before) && is_lnn(lnn_after) &&
                lnn_before.gates().size() == decomposed.gates().size() + 2 * res.before.pairs &&
                lnn_after.gates().size() == decomposed.gates().size() + 2 * res.after.pairs;
      ok = ok && equivalent(original, lnn_before, eq);
      eq.line_map = res.ordering;
      ok = ok && equivalent(original, lnn_after, eq);
      r.verification = ok ? Verification::Passed : Verification::Failed;
    }
  }
  if (!verify) {
    r.warnings.push_back("equivalence check skipped: " + std::to_string(decomposed.num_lines()) +
                         " lines exceeds limit of " + std::to_string(opts.verify_max_lines));
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline CostReport run_file(const std::filesystem::path& path, const ReportOptions& opts = {}) {
  RealDocument doc = [&] {
    try {
      return read_real_file(path);
    } catch (const Error& e) {
      throw FileError(path, e.what());
    }
  }();
  return run_circuit(path.stem().string(), doc, opts);
}

struct SuiteEntry {
  std::filesystem::path file;
  std::optional<CostReport> report;
  std::string error;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;

  /// Mean reduction over rows that ran; empty when there are none.
  std::optional<double> average_reduction_pct() const {
    double sum = 0;
    std::size_t n = 0;
    for (const auto& e : entries)
      if (e.report) {
        sum += e.report->reduction_pct();
        ++n;
      }
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
  }

  bool any_failure() const {
    for (const auto& e : entries)
      if (!e.report || e.report->verification == Verification::Failed) return true;
    return false;
  }
};

/// Runs every `.real` file in `target` (or `target` itself when it is a file).
/// Rows are sorted by file name; per-file errors are recorded and the run continues.
inline SuiteReport run_suite(const std::filesystem::path& target, const ReportOptions& opts = {}) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(target)) {
    for (const auto& entry : std::filesystem::directory_iterator(target))
      if (entry.is_regular_file() && entry.path().extension() == ".real") files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  } else {
    files.push_back(target);
  }

  SuiteReport suite;
  suite.entries.resize(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      auto& e = suite.entries[i];
      e.file = files[i];
      try {
        e.report = run_file(files[i], opts);
      } catch (const std::exception& ex) {
        e.error = ex.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(files.size())));
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
  }
  return suite;
}

namespace detail {

inline std::string fixed2(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <typename T>
std::string opt_str(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace detail

inline std::string to_csv(const SuiteReport& suite, bool timings = false) {
  std::ostringstream os;
  os << "circuit,lines,lines_decomposed,gates,gates_decomposed,base_qc,annotated_qc,"
        "pairs_before,swap_cost_before,total_qc_before,pairs_after,swap_cost_after,total_qc_after,"
        "reduction_pct,order,seed,verification,ref_total_before,ref_total_after,ref_reduction_pct,"
        "prior_method_qc,ref_match,status";
  if (timings) os << ",wall_ms";
  os << '\n';
  for (const auto& e : suite.entries) {
    if (!e.report) {
      os << detail::csv_field(e.file.stem().string()) << std::string(22, ',')
         << detail::csv_field("error: " + e.error);
      if (timings) os << ',';
      os << '\n';
      continue;
    }
    const CostReport& r = *e.report;
    const auto& ref = r.reference;
    os << detail::csv_field(r.circuit) << ',' << r.lines << ',' << r.lines_decomposed << ','
       << r.gates << ',' << r.gates_decomposed << ',' << r.base_qc << ','
       << detail::opt_str(r.annotated_qc) << ',' << r.pairs_before.pairs << ','
       << r.swap_cost_before() << ',' << r.total_before() << ',' << r.pairs_after.pairs << ','
       << r.swap_cost_after() << ',' << r.total_after() << ',' << detail::fixed2(r.reduction_pct())
       << ',' << to_string(r.strategy) << ',' << r.seed << ',' << to_string(r.verification) << ',';
    if (ref) {
      os << ref->total_before << ',' << ref->total_after << ',' << detail::fixed2(ref->reduction_pct)
         << ',' << (ref->prior_method_qc >= 0 ? std::to_string(ref->prior_method_qc) : "") << ','
         << (r.reference_mismatch() ? "no" : "yes");
    } else {
      os << ",,,,";
    }
    os << ',' << (r.verification == Verification::Failed ? "failed" : "ok");
    if (timings) os << ',' << detail::fixed2(r.wall_ms);
    os << '\n';
  }
  const auto avg = suite.average_reduction_pct();
  os << "# average_reduction_pct," << (avg ? detail::fixed2(*avg) : "n/a") << '\n';
  return os.str();
}

inline std::string to_markdown(const SuiteReport& suite, bool timings = false) {
  std::ostringstream os;
  os << "| Circuit | N | GC | QC | SWAP cost before | Total QC before | SWAP cost after | "
        "Total QC after | % decrease | Ref. total before | Ref. total after | Prior method QC | "
        "Verified |";
  if (timings) os << " ms |";
  os << "\n|---|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---|";
  if (timings) os << "---:|";
  os << '\n';
  for (const auto& e : suite.entries) {
    if (!e.report) {
      os << "| " << e.file.stem().string() << " | error: " << e.error << " |\n";
      continue;
    }
    const CostReport& r = *e.report;
    const auto& ref = r.reference;
    os << "| " << r.circuit << (r.reference_mismatch() ? " (*)" : "") << " | " << r.lines << " | "
       << r.gates << " | " << r.base_qc << " | " << r.swap_cost_before() << " | " << r.total_before()
       << " | " << r.swap_cost_after() << " | " << r.total_after() << " | "
       << detail::fixed2(r.reduction_pct()) << " | " << (ref ? std::to_string(ref->total_before) : "-")
       << " | " << (ref ? std::to_string(ref->total_after) : "-") << " | "
       << (ref && ref->prior_method_qc >= 0 ? std::to_string(ref->prior_method_qc) : "-") << " | "
       << to_string(r.verification) << " |";
    if (timings) os << ' ' << detail::fixed2(r.wall_ms) << " |";
    os << '\n';
  }
  const auto avg = suite.average_reduction_pct();
  os << "\nAverage cost reduction %: " << (avg ? detail::fixed2(*avg) : "n/a") << '\n';
  bool flagged = false;
  for (const auto& e : suite.entries) flagged = flagged || (e.report && e.report->reference_mismatch());
  if (flagged) os << "\n(*) recomputed N, GC or total QC before reordering differs from the reference row.\n";
  return os.str();
}

}  // namespace lnn

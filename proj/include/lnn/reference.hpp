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

// Published before/after figures for the RevLib benchmarks, used only as a
// comparison column in reports. Some rows are internally inconsistent
// (base + SWAP cost != total); reports flag disagreement instead of
// adjusting either side.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace lnn {

struct ReferenceRow {
  std::string_view name;
  std::int64_t lines;
  std::int64_t gates;
  std::int64_t quantum_cost;
  std::int64_t swap_cost_before;
  std::int64_t total_before;
  std::int64_t swap_cost_after;
  std::int64_t total_after;
  double reduction_pct;
  /// Quantum cost reported by an earlier decompose-then-reorder LNN method; -1 if absent.
  std::int64_t prior_method_qc;
};

inline constexpr std::array<ReferenceRow, 54> kReferenceRows{{
    {"3_17_13", 3, 6, 14, 6, 20, 0, 14, 30, 28},
    {"4_49_17", 4, 12, 16, 66, 98, 18, 50, 48.9, 98},
    {"4gt4-v0_80", 5, 5, 37, 120, 153, 48, 81, 47, 138},
    {"4gt5_75", 5, 5, 21, 78, 101, 36, 59, 41.5, 79},
    {"4gt12-v1_89", 5, 5, 45, 114, 157, 126, 169, -7.64, 168},
    {"4gt13-v1_93", 5, 4, 16, 72, 90, 6, 24, 73.3, 53},
    {"4gt-10v1_81", 5, 6, 34, 120, 158, 96, 134, 15.2, 147},
    {"4mod5-bdd_287", 7, 8, 24, 90, 114, 72, 96, 15.7, -1},
    {"4mod5-v1_23", 5, 8, 24, 84, 108, 42, 66, 38.8, 78},
    {"5xp1_194", 17, 85, 1430, 28194, 29523, 7164, 8493, 71.2, -1},
    {"9symml_195", 10, 129, 14193, 34458, 38303, 19764, 23609, 38.3, -1},
    {"add6_196", 19, 229, 6455, 122910, 128831, 45606, 51527, 60, -1},
    {"adr4_197", 13, 55, 727, 9774, 10489, 4986, 5701, 45.6, -1},
    {"aj-e11_165", 4, 13, 45, 84, 131, 90, 137, -4.5, 181},
    {"alu1_198", 20, 32, 228, 6498, 6756, 1944, 2202, 67.4, -1},
    {"alu2_199", 16, 157, 5654, 70716, 74991, 21240, 25515, 65.9, -1},
    {"alu3_200", 18, 94, 2632, 45954, 48290, 21000, 23336, 51.6, -1},
    {"alu4_201", 22, 1063, 55388, 1059834, 1106423, 541380, 587969, 46.8, -1},
    {"alu-bdd_288", 7, 9, 29, 144, 173, 102, 131, 24.2, -1},
    {"apla_203", 22, 80, 3438, 77742, 80828, 23394, 26480, 67.2, -1},
    {"apex4_202", 28, 5376, 237963, 7659894, 7875016, 1922358, 2137480, 72.8, -1},
    {"bw_291", 87, 307, 943, 79326, 80269, 46158, 47101, 41.3, -1},
    {"c7552_205", 21, 80, 1728, 50418, 52102, 10746, 12430, 76.1, -1},
    {"clip_206", 14, 174, 6731, 72792, 77764, 29292, 34264, 55.9, -1},
    {"cm42a_207", 14, 35, 377, 7236, 7617, 1590, 1971, 74.7, -1},
    {"cm85a_209", 14, 69, 2252, 26958, 28995, 11562, 13599, 54, -1},
    {"cm150a_210", 22, 53, 1096, 8472, 9467, 5124, 6119, 35.3, -1},
    {"cm151a_211", 28, 33, 888, 21216, 22027, 5016, 5827, 73.5, -1},
    {"cm152a_212", 12, 16, 252, 1566, 1816, 1416, 1666, 8.2, -1},
    {"cm163a_213", 29, 39, 756, 22800, 23499, 6780, 7479, 68.1, -1},
    {"cmb_214", 20, 18, 910, 7800, 8234, 2748, 3182, 61.3, -1},
    {"co14_215", 15, 30, 3488, 24438, 26064, 8466, 10092, 61.2, -1},
    {"cu_219", 25, 40, 1148, 30234, 31262, 9402, 10430, 66.6, -1},
    {"cycle10_2_110", 12, 19, 1202, 9690, 10417, 2808, 3535, 66, 8046},
    {"dc1_220", 11, 39, 416, 5994, 6419, 1482, 1907, 70.2, -1},
    {"dc2_222", 15, 75, 1886, 32052, 33809, 8634, 10391, 69.2, -1},
    {"decod24-v3_46", 4, 9, 9, 54, 63, 12, 21, 66.6, 21},
    {"decod_217", 21, 80, 1728, 50418, 52102, 10746, 12430, 76.1, -1},
    {"dist_223", 13, 185, 7601, 76164, 81591, 24828, 30255, 62.9, -1},
    {"f51m_233", 22, 663, 37400, 612030, 639493, 281508, 308971, 51.6, -1},
    {"ham15_108", 15, 70, 453, 3312, 3764, 2418, 2870, 23.7, 2588},
    {"hwb4_52", 4, 11, 23, 42, 65, 48, 71, -9.2, 65},
    {"hwb5_55", 5, 24, 104, 378, 492, 276, 390, 20.7, 337},
    {"inc_237", 16, 93, 2140, 40410, 42407, 11772, 13769, 67.5, -1},
    {"mod5adder_128", 6, 15, 83, 522, 613, 150, 241, 60.6, 330},
    {"mod8-10_177", 5, 14, 94, 330, 418, 234, 322, 22.9, 363},
    {"plus127mod8192_162", 13, 910, 73357, 508134, 551588, 403938, 447392, 18.8, 503516},
    {"plus63mod4096_163", 12, 429, 32539, 193446, 211559, 159258, 177371, 16.1, 210400},
    {"plus63mod8192_164", 13, 492, 45025, 267480, 290798, 203772, 227090, 21.9, 279016},
    {"rd53_135", 7, 16, 77, 558, 636, 348, 426, 33, 303},
    {"rd84_313", 34, 104, 304, 6780, 7084, 4548, 4852, 31.5, -1},
    {"sqn_258", 10, 76, 2122, 15258, 16784, 5562, 7088, 57.7, -1},
    {"sym9_317", 27, 62, 206, 3870, 4076, 1686, 1892, 53.5, -1},
    {"z4ml_269", 11, 48, 642, 7386, 8018, 3600, 4232, 47.2, -1},
}};

inline std::optional<ReferenceRow> find_reference(std::string_view name) {
  auto it = std::find_if(kReferenceRows.begin(), kReferenceRows.end(),
                         [&](const ReferenceRow& r) { return r.name == name; });
  if (it == kReferenceRows.end()) return std::nullopt;
  return *it;
}

}  // namespace lnn

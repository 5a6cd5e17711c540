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

#include "lnn/circuit.hpp"
#include "lnn/decompose.hpp"
#include "lnn/errors.hpp"
#include "lnn/graph.hpp"
#include "lnn/metrics.hpp"
#include "lnn/ordering.hpp"
#include "lnn/partition.hpp"
#include "lnn/reference.hpp"
#include "lnn/report.hpp"
#include "lnn/revlib.hpp"
#include "lnn/simulate.hpp"

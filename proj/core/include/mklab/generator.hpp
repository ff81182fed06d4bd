// Copyright 2026 The makespan-lab Authors
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

#include <cstdint>

#include "mklab/workload.hpp"

namespace mklab {

// Seeded random-workload generation. The seed fully determines the output,
// across platforms: sampling uses mt19937_64 with explicit rejection
// sampling, never std::uniform_int_distribution.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  int n = 1;
  ClusterConfig cluster{30, 30};
  // Durations are uniform rationals in [duration_lo, duration_hi] with
  // denominator at most max_denominator.
  Rational duration_lo = 1;
  Rational duration_hi = 20;
  int max_denominator = 100;
  // Demands are uniform integers in [demand_lo, min(demand_hi, capacity)];
  // demand_hi == 0 means "cluster capacity".
  int demand_lo = 1;
  int demand_hi = 0;
};

// Throws ParameterError on empty ranges or n < 1.
Workload generate_workload(const GeneratorConfig& config);

}  // namespace mklab

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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mklab/rational.hpp"

namespace mklab {

// One job as seen by the two-stage pipeline: its id and the effective
// stage durations at whatever allocation the caller has already fixed.
struct JohnsonJob {
  std::string id;
  Rational map_duration;
  Rational reduce_duration;

  bool operator==(const JohnsonJob&) const = default;
};

struct StageDurations {
  Rational map;
  Rational reduce;

  bool operator==(const StageDurations&) const = default;
};

// An execution order: a permutation of job ids with aligned durations.
struct OrderedSequence {
  std::vector<std::string> job_ids;
  std::vector<StageDurations> durations;

  std::size_t size() const { return job_ids.size(); }
  bool empty() const { return job_ids.empty(); }

  bool operator==(const OrderedSequence&) const = default;
};

// Makespan of a sequence where every job occupies the whole stage:
//
//   C_max = sum_i reduce_i + max_u K_u,
//   K_u   = sum_{i<=u} map_i - sum_{i<=u-1} reduce_i.
//
// max_u K_u is also the leading idle gap of the reduce stage.
struct MakespanBreakdown {
  Rational makespan;
  std::vector<Rational> prefix_terms;  // K_u for u = 1..n
  std::size_t critical_u = 0;          // index into prefix_terms of the max (first on ties)
  Rational idle_gap;                   // max_u K_u (0 for an empty sequence)
};

// Johnson's two-stage ordering. Jobs whose map duration is <= their reduce
// duration are "map type" and come first in non-decreasing map duration;
// the rest come after in non-increasing reduce duration. Ties on a sort key
// keep the job with the smaller input position first. An own-stage tie
// (map == reduce) classifies the job as map type.
//
// Durations must be >= 0 (ParameterError otherwise). Empty input yields an
// empty sequence.
OrderedSequence johnson_order(std::span<const JohnsonJob> jobs);

// Evaluates the closed form above, exactly. Empty sequence: makespan 0.
MakespanBreakdown closed_form_makespan(const OrderedSequence& sequence);

// Per-job completion times of the same pipeline via the flow-shop
// recurrence c_i = max(sum_{k<=i} map_k, c_{i-1}) + reduce_i. The last
// entry always equals the closed-form makespan; both routes are kept as a
// cross-check of each other.
std::vector<Rational> pipeline_completion_times(const OrderedSequence& sequence);

}  // namespace mklab

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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mklab/rational.hpp"

namespace mklab {

// A job's map/reduce stage demands and durations at its reference slot
// allocation. Stage durations follow the fluid (divisible-load) model:
// duration = total task time / allocated slots, so reallocating slots
// rescales a stage duration proportionally. Optional per-task times, when
// present, must be consistent with the stage duration at the reference
// demand (validated exactly, no tolerance).
struct JobSpec {
  std::string id;
  int map_demand = 1;     // requested map slots at the reference allocation
  int reduce_demand = 1;  // requested reduce slots
  Rational map_duration;
  Rational reduce_duration;
  std::optional<std::vector<Rational>> map_tasks;
  std::optional<std::vector<Rational>> reduce_tasks;

  bool operator==(const JobSpec&) const = default;
};

// Total map and reduce slots of a cluster or of one pool.
struct ClusterConfig {
  int map_slots = 1;
  int reduce_slots = 1;

  // rho = map slots / reduce slots, the tunable cluster shape.
  Rational slot_ratio() const { return Rational(map_slots, reduce_slots); }

  bool operator==(const ClusterConfig&) const = default;
};

// Jobs in submission order plus the cluster they were submitted to. Demands
// may exceed the cluster's capacity; policies clamp and rescale, loaders
// never reject for that reason.
struct Workload {
  std::vector<JobSpec> jobs;
  ClusterConfig cluster;

  bool operator==(const Workload&) const = default;
};

// A job rescaled to a concrete allocation. Effective durations obey
// eff = reference duration * demand / allocation, exactly.
struct ScaledJob {
  std::string id;
  int alloc_map = 1;
  int alloc_reduce = 1;
  Rational eff_map_duration;
  Rational eff_reduce_duration;

  bool operator==(const ScaledJob&) const = default;
};

// Rescales both stages of `job` to the given allocation.
// Throws ParameterError if either allocation is < 1.
ScaledJob scale_durations(const JobSpec& job, int alloc_map, int alloc_reduce);

// Fluid stage duration: sum of task times divided by slots. An empty task
// list is a stage with no work and has zero duration.
Rational duration_from_tasks(std::span<const Rational> task_times, int slots);

// Discrete wave alternative, opt-in for sensitivity studies only:
// duration = max task time * ceil(task count / slots). Not used by any
// policy's default path.
Rational wave_duration_from_tasks(std::span<const Rational> task_times, int slots);

// min(demand, capacity); demands above capacity are served with the whole
// stage and the duration rescaled.
int clamp_allocation(int demand, int capacity);

// Checks every JobSpec invariant (ids unique, demands >= 1, durations and
// task times >= 0, task lists consistent with stage durations) and returns
// the workload unchanged. Throws ValidationError carrying every violation.
Workload validate_workload(Workload workload);

}  // namespace mklab

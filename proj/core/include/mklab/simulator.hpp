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

#include <string>
#include <string_view>
#include <vector>

#include "mklab/rational.hpp"
#include "mklab/schedulers.hpp"

namespace mklab {

enum class Stage { Map, Reduce };

std::string_view stage_name(Stage stage);

// One executed stage: a gang of slots_used slots held for the whole
// interval [start, end).
struct StageRun {
  std::string job_id;
  Stage stage = Stage::Map;
  Rational start;
  Rational end;
  int slots_used = 0;

  bool operator==(const StageRun&) const = default;
};

struct OccupancyStep {
  Rational time;
  int slots_in_use = 0;

  bool operator==(const OccupancyStep&) const = default;
};

// The simulated execution record: stage intervals, the measured makespan,
// and cluster-wide slots-in-use step functions per stage.
struct Timeline {
  std::vector<StageRun> runs;
  Rational makespan;
  std::vector<OccupancyStep> map_occupancy;
  std::vector<OccupancyStep> reduce_occupancy;

  bool operator==(const Timeline&) const = default;
};

// Gang-scheduled FIFO replay with no overtaking, per pool:
//
//  - jobs enter the map stage strictly in sequence order; a map stage
//    starts at the earliest time >= its predecessor's map start at which
//    its whole gang of map slots is free;
//  - a reduce stage starts at the earliest time >= max(own map end,
//    predecessor's reduce start) at which its reduce gang is free;
//  - a stage holds its slots for its entire duration.
//
// Later jobs never start a stage before an earlier job has started it,
// even when slots are idle. Map and reduce pools are disjoint, so one job's
// reduce may overlap other jobs' maps. Deterministic: identical schedules
// produce identical timelines.
//
// Throws CapacityError if any job's allocation exceeds its pool.
Timeline simulate_fifo(const Schedule& schedule);

// A broken invariant found in a timeline. Violations are data, not errors.
struct TimelineViolation {
  std::string kind;  // "capacity", "stage_order", "fifo_order", "duration", ...
  std::string job_id;
  std::string detail;
};

// Checks a timeline against its schedule and the cluster: per-pool and
// cluster-wide capacity, per-job stage order (reduce after own map), FIFO
// no-overtaking, duration/allocation consistency, and one run per stage per
// scheduled job. Empty result means the timeline is valid.
std::vector<TimelineViolation> verify_timeline(const Timeline& timeline,
                                               const Schedule& schedule,
                                               const ClusterConfig& cluster);

// Stage runs sorted by start time (maps before reduces on ties, then by
// job id); the row form behind the Gantt CSV.
std::vector<StageRun> emit_gantt(const Timeline& timeline);

// CSV with header
//   job_id,stage,start_decimal,start_exact,end_decimal,end_exact,slots
// one row per stage run in start order, times in both decimal (15
// significant digits) and exact p/q form.
std::string format_gantt_csv(const Timeline& timeline);

}  // namespace mklab

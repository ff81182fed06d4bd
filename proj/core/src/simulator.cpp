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

#include "mklab/simulator.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "mklab/errors.hpp"

namespace mklab {

std::string_view stage_name(Stage stage) {
  return stage == Stage::Map ? "MAP" : "REDUCE";
}

namespace {

// Free-slot tracker for one stage of one pool. All placements arrive with
// non-decreasing anchors, so every already-placed run starts at or before
// the next anchor and the free-slot count is non-decreasing in time beyond
// it; the earliest feasible start is therefore the anchor itself or the
// first release after it.
class StageTracker {
 public:
  explicit StageTracker(int capacity) : capacity_(capacity) {}

  // Earliest t >= anchor with `slots` free through [t, t + duration).
  Rational place(const Rational& anchor, int slots, const Rational& duration) {
    Rational t = anchor;
    while (busy_at(t) + slots > capacity_) t = next_release_after(t);
    active_.emplace_back(t + duration, slots);
    return t;
  }

 private:
  int busy_at(const Rational& t) const {
    int busy = 0;
    for (const auto& [end, slots] : active_) {
      if (end > t) busy += slots;
    }
    return busy;
  }

  Rational next_release_after(const Rational& t) const {
    const Rational* earliest = nullptr;
    for (const auto& [end, slots] : active_) {
      if (end > t && (earliest == nullptr || end < *earliest)) earliest = &end;
    }
    // Unreachable when allocations fit the pool: all slots are free after
    // the last release.
    if (earliest == nullptr) {
      throw CapacityError("no release frees enough slots; allocation exceeds the pool");
    }
    return *earliest;
  }

  int capacity_;
  std::vector<std::pair<Rational, int>> active_;  // (release time, slots)
};

std::vector<OccupancyStep> occupancy_steps(const std::vector<StageRun>& runs, Stage stage) {
  // Half-open intervals: releases apply before acquisitions at equal times.
  std::vector<std::pair<Rational, int>> events;
  for (const StageRun& run : runs) {
    if (run.stage != stage || run.start == run.end) continue;
    events.emplace_back(run.start, run.slots_used);
    events.emplace_back(run.end, -run.slots_used);
  }
  std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });

  std::vector<OccupancyStep> steps;
  int in_use = 0;
  for (std::size_t i = 0; i < events.size();) {
    const Rational& time = events[i].first;
    while (i < events.size() && events[i].first == time) {
      in_use += events[i].second;
      ++i;
    }
    if (steps.empty() || steps.back().slots_in_use != in_use) {
      steps.push_back({time, in_use});
    }
  }
  return steps;
}

}  // namespace

Timeline simulate_fifo(const Schedule& schedule) {
  for (const PoolSchedule& pool : schedule.pools) {
    for (const ScaledJob& job : pool.jobs) {
      if (job.alloc_map > pool.slots.map_slots ||
          job.alloc_reduce > pool.slots.reduce_slots) {
        throw CapacityError("job '" + job.id + "' demands " +
                            std::to_string(job.alloc_map) + "x" +
                            std::to_string(job.alloc_reduce) + " slots of a " +
                            std::to_string(pool.slots.map_slots) + "x" +
                            std::to_string(pool.slots.reduce_slots) + " pool");
      }
    }
  }

  Timeline timeline;
  timeline.makespan = 0;

  for (const PoolSchedule& pool : schedule.pools) {
    StageTracker map_slots(pool.slots.map_slots);
    StageTracker reduce_slots(pool.slots.reduce_slots);
    Rational prev_map_start = 0;
    Rational prev_reduce_start = 0;

    for (const ScaledJob& job : pool.jobs) {
      const Rational map_start =
          map_slots.place(prev_map_start, job.alloc_map, job.eff_map_duration);
      const Rational map_end = map_start + job.eff_map_duration;

      const Rational reduce_anchor = std::max(map_end, prev_reduce_start);
      const Rational reduce_start =
          reduce_slots.place(reduce_anchor, job.alloc_reduce, job.eff_reduce_duration);
      const Rational reduce_end = reduce_start + job.eff_reduce_duration;

      timeline.runs.push_back({job.id, Stage::Map, map_start, map_end, job.alloc_map});
      timeline.runs.push_back(
          {job.id, Stage::Reduce, reduce_start, reduce_end, job.alloc_reduce});
      timeline.makespan = std::max(timeline.makespan, reduce_end);

      prev_map_start = map_start;
      prev_reduce_start = reduce_start;
    }
  }

  timeline.map_occupancy = occupancy_steps(timeline.runs, Stage::Map);
  timeline.reduce_occupancy = occupancy_steps(timeline.runs, Stage::Reduce);
  return timeline;
}

namespace {

void check_stage_capacity(const std::vector<StageRun>& runs, Stage stage, int capacity,
                          const std::string& scope,
                          std::vector<TimelineViolation>& violations) {
  std::vector<std::pair<Rational, int>> events;
  for (const StageRun& run : runs) {
    if (run.stage != stage || run.start == run.end) continue;
    events.emplace_back(run.start, run.slots_used);
    events.emplace_back(run.end, -run.slots_used);
  }
  std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });

  int in_use = 0;
  bool exceeding = false;
  for (std::size_t i = 0; i < events.size();) {
    const Rational time = events[i].first;
    while (i < events.size() && events[i].first == time) {
      in_use += events[i].second;
      ++i;
    }
    if (in_use > capacity && !exceeding) {
      violations.push_back({"capacity", "",
                            scope + " " + std::string(stage_name(stage)) + " slots: " +
                                std::to_string(in_use) + " in use at t=" +
                                to_exact_string(time) + ", capacity " +
                                std::to_string(capacity)});
    }
    exceeding = in_use > capacity;
  }
}

}  // namespace

std::vector<TimelineViolation> verify_timeline(const Timeline& timeline,
                                               const Schedule& schedule,
                                               const ClusterConfig& cluster) {
  std::vector<TimelineViolation> violations;

  int pool_map_total = 0;
  int pool_reduce_total = 0;
  for (const PoolSchedule& pool : schedule.pools) {
    pool_map_total += pool.slots.map_slots;
    pool_reduce_total += pool.slots.reduce_slots;
  }
  if (pool_map_total > cluster.map_slots || pool_reduce_total > cluster.reduce_slots) {
    violations.push_back({"pool_config", "",
                          "pool slot totals " + std::to_string(pool_map_total) + "x" +
                              std::to_string(pool_reduce_total) + " exceed the cluster's " +
                              std::to_string(cluster.map_slots) + "x" +
                              std::to_string(cluster.reduce_slots)});
  }

  // Index runs by (job, stage); flag duplicates and strays.
  std::map<std::pair<std::string, Stage>, const StageRun*> run_index;
  std::map<std::string, std::size_t> scheduled;  // job id -> pool index
  for (std::size_t p = 0; p < schedule.pools.size(); ++p) {
    for (const ScaledJob& job : schedule.pools[p].jobs) scheduled.emplace(job.id, p);
  }
  for (const StageRun& run : timeline.runs) {
    if (!scheduled.contains(run.job_id)) {
      violations.push_back({"unknown_job", run.job_id, "run for a job not in the schedule"});
      continue;
    }
    auto [it, inserted] = run_index.emplace(std::make_pair(run.job_id, run.stage), &run);
    if (!inserted) {
      violations.push_back({"duplicate_run", run.job_id,
                            std::string(stage_name(run.stage)) + " stage appears twice"});
    }
  }

  for (const PoolSchedule& pool : schedule.pools) {
    // Duration/allocation consistency and per-job stage order.
    for (const ScaledJob& job : pool.jobs) {
      const StageRun* map_run = nullptr;
      const StageRun* reduce_run = nullptr;
      if (auto it = run_index.find({job.id, Stage::Map}); it != run_index.end()) {
        map_run = it->second;
      }
      if (auto it = run_index.find({job.id, Stage::Reduce}); it != run_index.end()) {
        reduce_run = it->second;
      }
      for (auto [run, stage, alloc, duration] :
           {std::tuple{map_run, Stage::Map, job.alloc_map, job.eff_map_duration},
            std::tuple{reduce_run, Stage::Reduce, job.alloc_reduce,
                       job.eff_reduce_duration}}) {
        if (run == nullptr) {
          violations.push_back({"missing_run", job.id,
                                std::string(stage_name(stage)) + " stage has no run"});
          continue;
        }
        if (run->end - run->start != duration) {
          violations.push_back({"duration", job.id,
                                std::string(stage_name(stage)) + " run lasts " +
                                    to_exact_string(run->end - run->start) +
                                    ", scheduled duration " + to_exact_string(duration)});
        }
        if (run->slots_used != alloc) {
          violations.push_back({"allocation", job.id,
                                std::string(stage_name(stage)) + " run uses " +
                                    std::to_string(run->slots_used) +
                                    " slots, allocated " + std::to_string(alloc)});
        }
      }
      if (map_run != nullptr && reduce_run != nullptr &&
          reduce_run->start < map_run->end) {
        violations.push_back({"stage_order", job.id,
                              "reduce starts at " + to_exact_string(reduce_run->start) +
                                  ", before its map ends at " +
                                  to_exact_string(map_run->end)});
      }
    }

    // FIFO no-overtaking: stage starts non-decreasing in sequence order.
    for (Stage stage : {Stage::Map, Stage::Reduce}) {
      const StageRun* previous = nullptr;
      for (const ScaledJob& job : pool.jobs) {
        auto it = run_index.find({job.id, stage});
        if (it == run_index.end()) continue;
        if (previous != nullptr && it->second->start < previous->start) {
          violations.push_back({"fifo_order", job.id,
                                std::string(stage_name(stage)) + " starts at " +
                                    to_exact_string(it->second->start) + ", before '" +
                                    previous->job_id + "' at " +
                                    to_exact_string(previous->start)});
        }
        previous = it->second;
      }
    }

    // Per-pool capacity, over this pool's runs only.
    std::vector<StageRun> pool_runs;
    for (const StageRun& run : timeline.runs) {
      auto it = scheduled.find(run.job_id);
      if (it != scheduled.end() &&
          &schedule.pools[it->second] == &pool) {
        pool_runs.push_back(run);
      }
    }
    const std::string scope =
        schedule.pools.size() == 1
            ? std::string("pool")
            : "pool " + std::to_string(&pool - schedule.pools.data() + 1);
    check_stage_capacity(pool_runs, Stage::Map, pool.slots.map_slots, scope, violations);
    check_stage_capacity(pool_runs, Stage::Reduce, pool.slots.reduce_slots, scope,
                         violations);
  }

  // Cluster-wide capacity across pools (the single-pool case is already
  // covered by the per-pool ledger).
  if (schedule.pools.size() > 1) {
    check_stage_capacity(timeline.runs, Stage::Map, cluster.map_slots, "cluster",
                         violations);
    check_stage_capacity(timeline.runs, Stage::Reduce, cluster.reduce_slots, "cluster",
                         violations);
  }

  return violations;
}

std::vector<StageRun> emit_gantt(const Timeline& timeline) {
  std::vector<StageRun> rows = timeline.runs;
  std::sort(rows.begin(), rows.end(), [](const StageRun& a, const StageRun& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.stage != b.stage) return a.stage == Stage::Map;
    return a.job_id < b.job_id;
  });
  return rows;
}

std::string format_gantt_csv(const Timeline& timeline) {
  std::string csv = "job_id,stage,start_decimal,start_exact,end_decimal,end_exact,slots\n";
  for (const StageRun& row : emit_gantt(timeline)) {
    csv += row.job_id;
    csv += ',';
    csv += stage_name(row.stage);
    csv += ',';
    csv += to_decimal_string(row.start);
    csv += ',';
    csv += to_exact_string(row.start);
    csv += ',';
    csv += to_decimal_string(row.end);
    csv += ',';
    csv += to_exact_string(row.end);
    csv += ',';
    csv += std::to_string(row.slots_used);
    csv += '\n';
  }
  return csv;
}

}  // namespace mklab

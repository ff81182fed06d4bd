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

#include "mklab/workload.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "mklab/errors.hpp"

namespace mklab {

ScaledJob scale_durations(const JobSpec& job, int alloc_map, int alloc_reduce) {
  if (alloc_map < 1 || alloc_reduce < 1) {
    throw ParameterError("invalid allocation for job '" + job.id + "': " +
                         std::to_string(alloc_map) + "x" + std::to_string(alloc_reduce) +
                         " (both slot counts must be >= 1)");
  }
  ScaledJob scaled;
  scaled.id = job.id;
  scaled.alloc_map = alloc_map;
  scaled.alloc_reduce = alloc_reduce;
  scaled.eff_map_duration = job.map_duration * job.map_demand / alloc_map;
  scaled.eff_reduce_duration = job.reduce_duration * job.reduce_demand / alloc_reduce;
  return scaled;
}

Rational duration_from_tasks(std::span<const Rational> task_times, int slots) {
  if (slots < 1) {
    throw ParameterError("slot count must be >= 1, got " + std::to_string(slots));
  }
  Rational total = 0;
  for (const Rational& t : task_times) total += t;
  return total / slots;
}

Rational wave_duration_from_tasks(std::span<const Rational> task_times, int slots) {
  if (slots < 1) {
    throw ParameterError("slot count must be >= 1, got " + std::to_string(slots));
  }
  if (task_times.empty()) return 0;
  const Rational longest = *std::max_element(task_times.begin(), task_times.end());
  const auto waves = (task_times.size() + slots - 1) / static_cast<std::size_t>(slots);
  return longest * static_cast<long>(waves);
}

int clamp_allocation(int demand, int capacity) { return std::min(demand, capacity); }

namespace {

void check_tasks(const JobSpec& job, const std::optional<std::vector<Rational>>& tasks,
                 const Rational& duration, int demand, const char* stage,
                 std::vector<FieldIssue>& issues) {
  if (!tasks) return;
  for (const Rational& t : *tasks) {
    if (t < 0) {
      issues.push_back({job.id, std::string(stage) + "_tasks", "negative task time"});
      return;
    }
  }
  if (demand < 1) return;  // demand issue reported separately
  Rational total = 0;
  for (const Rational& t : *tasks) total += t;
  if (total / demand != duration) {
    issues.push_back({job.id, std::string(stage) + "_tasks",
                      "task times sum to " + to_exact_string(total) + " over " +
                          std::to_string(demand) + " slots, which gives stage duration " +
                          to_exact_string(total / demand) + ", not " +
                          to_exact_string(duration)});
  }
}

}  // namespace

Workload validate_workload(Workload workload) {
  std::vector<FieldIssue> issues;

  if (workload.cluster.map_slots < 1) {
    issues.push_back({"", "cluster.map_slots", "must be >= 1"});
  }
  if (workload.cluster.reduce_slots < 1) {
    issues.push_back({"", "cluster.reduce_slots", "must be >= 1"});
  }

  std::unordered_set<std::string> seen;
  for (const JobSpec& job : workload.jobs) {
    if (job.id.empty()) {
      issues.push_back({job.id, "id", "must not be empty"});
    }
    if (!seen.insert(job.id).second) {
      issues.push_back({job.id, "id", "duplicate job id"});
    }
    if (job.map_demand < 1) {
      issues.push_back({job.id, "map_demand", "must be >= 1"});
    }
    if (job.reduce_demand < 1) {
      issues.push_back({job.id, "reduce_demand", "must be >= 1"});
    }
    if (job.map_duration < 0) {
      issues.push_back({job.id, "map_duration", "must be >= 0"});
    }
    if (job.reduce_duration < 0) {
      issues.push_back({job.id, "reduce_duration", "must be >= 0"});
    }
    check_tasks(job, job.map_tasks, job.map_duration, job.map_demand, "map", issues);
    check_tasks(job, job.reduce_tasks, job.reduce_duration, job.reduce_demand, "reduce",
                issues);
  }

  if (!issues.empty()) throw ValidationError(std::move(issues));
  return workload;
}

ValidationError::ValidationError(std::vector<FieldIssue> issues)
    : Error([&issues] {
        std::string message = "workload validation failed:";
        for (const FieldIssue& issue : issues) {
          message += "\n  ";
          if (!issue.job_id.empty()) message += issue.job_id + ".";
          message += issue.field + ": " + issue.message;
        }
        return message;
      }()),
      issues_(std::move(issues)) {}

}  // namespace mklab

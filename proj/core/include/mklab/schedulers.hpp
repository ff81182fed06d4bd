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
#include <string>
#include <string_view>
#include <vector>

#include "mklab/johnson.hpp"
#include "mklab/workload.hpp"

namespace mklab {

// Policies expect a validated workload (unique job ids, positive demands,
// non-negative durations); run validate_workload on untrusted input first.
enum class Policy { Uaas, MkJr, BalancedPools, Custom };

std::string_view policy_name(Policy policy);

// One pool: its slots and the jobs it runs, in execution order, each with a
// concrete allocation and effective durations.
struct PoolSchedule {
  ClusterConfig slots;
  std::vector<ScaledJob> jobs;
  // Closed-form Johnson prediction where the policy defines one.
  std::optional<Rational> predicted_makespan;

  std::vector<std::string> job_ids() const;
  OrderedSequence sequence() const;

  bool operator==(const PoolSchedule&) const = default;
};

// The joint (order, allocation) decision of a policy. Single pool for every
// policy except BalancedPools (and even that degenerates to one pool when
// splitting cannot help).
struct Schedule {
  Policy policy = Policy::Custom;
  std::vector<PoolSchedule> pools;
  std::optional<Rational> predicted_makespan;
};

// UAAS: rescale every job to the whole cluster, order by Johnson's rule.
// The closed-form prediction is exact for this schedule (every job uses all
// slots, so the two-stage pipeline assumptions hold) and optimal.
Schedule uaas_schedule(const Workload& workload);

// MK_JR: jobs keep their own demanded allocations (clamped to cluster
// capacity with fluid rescaling when a demand exceeds it). J_A = jobs with
// map duration strictly below reduce duration, sorted by non-decreasing map
// duration; J_B = the rest, sorted by non-increasing reduce duration; order
// is J_A then J_B. No closed-form prediction: with per-job allocations the
// pipeline formula does not apply, the simulator is the evaluator.
Schedule mk_jr_schedule(const Workload& workload);

struct PoolSplit {
  ClusterConfig pool1;
  ClusterConfig pool2;
};

struct BalancedPoolsOptions {
  enum class Grid {
    // Splits with s / map_slots == r / reduce_slots at every integer s.
    kProportional,
    // Every (s, r) pair; O(map_slots * reduce_slots) candidates.
    kExhaustive,
  };
  Grid grid = Grid::kProportional;
  // Also consider handing the whole cluster to a single pool. Without it a
  // one-job workload could never match the trivial single-pool schedule.
  bool include_whole_cluster = true;
};

// BalancedPools: enumerate two-pool splits of the cluster, assign jobs
// greedily (sorted by reference map+reduce duration, largest first, each
// placed in the pool whose resulting Johnson-predicted makespan stays
// smaller; ties go to pool 1), order each pool by Johnson's rule, and keep
// the split with the smallest max pool makespan (smallest pool-1 share on
// ties). Jobs run at their demanded allocations clamped to the pool.
//
// Requires at least 2 slots per stage (ConfigError otherwise, or when the
// grid produces no candidate).
Schedule balanced_pools_schedule(const Workload& workload,
                                 const BalancedPoolsOptions& options = {});

// Pins an exact BalancedPools configuration: the given split and the given
// job-id assignment (assignment[0] -> pool 1, assignment[1] -> pool 2).
// Each pool is Johnson-ordered and gets its closed-form makespan. Exists so
// reference configurations stay testable independently of the search above.
// Throws AssignmentError when a job is missing or assigned twice, and
// ConfigError when the split exceeds the cluster.
Schedule fix_pools_and_assignment(const Workload& workload, const PoolSplit& split,
                                  const std::vector<std::vector<std::string>>& assignment);

}  // namespace mklab

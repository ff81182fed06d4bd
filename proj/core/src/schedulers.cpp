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

#include "mklab/schedulers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "mklab/errors.hpp"
#include "mklab/parallel.hpp"

namespace mklab {

std::string_view policy_name(Policy policy) {
  switch (policy) {
    case Policy::Uaas:
      return "uaas";
    case Policy::MkJr:
      return "mk_jr";
    case Policy::BalancedPools:
      return "balanced_pools";
    case Policy::Custom:
      return "custom";
  }
  return "custom";
}

std::vector<std::string> PoolSchedule::job_ids() const {
  std::vector<std::string> ids;
  ids.reserve(jobs.size());
  for (const ScaledJob& job : jobs) ids.push_back(job.id);
  return ids;
}

OrderedSequence PoolSchedule::sequence() const {
  OrderedSequence sequence;
  sequence.job_ids.reserve(jobs.size());
  sequence.durations.reserve(jobs.size());
  for (const ScaledJob& job : jobs) {
    sequence.job_ids.push_back(job.id);
    sequence.durations.push_back({job.eff_map_duration, job.eff_reduce_duration});
  }
  return sequence;
}

namespace {

std::vector<JohnsonJob> as_johnson_jobs(const std::vector<ScaledJob>& scaled) {
  std::vector<JohnsonJob> jobs;
  jobs.reserve(scaled.size());
  for (const ScaledJob& job : scaled) {
    jobs.push_back({job.id, job.eff_map_duration, job.eff_reduce_duration});
  }
  return jobs;
}

// Johnson-orders scaled jobs and attaches the closed-form prediction.
PoolSchedule make_johnson_pool(ClusterConfig slots, std::vector<ScaledJob> scaled) {
  const OrderedSequence sequence = johnson_order(as_johnson_jobs(scaled));
  std::map<std::string, ScaledJob> by_id;
  for (ScaledJob& job : scaled) by_id.emplace(job.id, std::move(job));

  PoolSchedule pool;
  pool.slots = slots;
  pool.jobs.reserve(sequence.size());
  for (const std::string& id : sequence.job_ids) pool.jobs.push_back(by_id.at(id));
  pool.predicted_makespan = closed_form_makespan(sequence).makespan;
  return pool;
}

ScaledJob clamp_and_scale(const JobSpec& job, const ClusterConfig& slots) {
  return scale_durations(job, clamp_allocation(job.map_demand, slots.map_slots),
                         clamp_allocation(job.reduce_demand, slots.reduce_slots));
}

}  // namespace

Schedule uaas_schedule(const Workload& workload) {
  std::vector<ScaledJob> scaled;
  scaled.reserve(workload.jobs.size());
  for (const JobSpec& job : workload.jobs) {
    scaled.push_back(
        scale_durations(job, workload.cluster.map_slots, workload.cluster.reduce_slots));
  }

  Schedule schedule;
  schedule.policy = Policy::Uaas;
  schedule.pools.push_back(make_johnson_pool(workload.cluster, std::move(scaled)));
  schedule.predicted_makespan = schedule.pools.front().predicted_makespan;
  return schedule;
}

Schedule mk_jr_schedule(const Workload& workload) {
  std::vector<ScaledJob> scaled;
  scaled.reserve(workload.jobs.size());
  for (const JobSpec& job : workload.jobs) {
    scaled.push_back(clamp_and_scale(job, workload.cluster));
  }

  // J_A: map strictly shorter than reduce, ascending map duration.
  // J_B: the rest (ties included), descending reduce duration.
  std::vector<std::size_t> set_a, set_b;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    (scaled[i].eff_map_duration < scaled[i].eff_reduce_duration ? set_a : set_b)
        .push_back(i);
  }
  std::stable_sort(set_a.begin(), set_a.end(), [&](std::size_t a, std::size_t b) {
    return scaled[a].eff_map_duration < scaled[b].eff_map_duration;
  });
  std::stable_sort(set_b.begin(), set_b.end(), [&](std::size_t a, std::size_t b) {
    return scaled[a].eff_reduce_duration > scaled[b].eff_reduce_duration;
  });

  PoolSchedule pool;
  pool.slots = workload.cluster;
  pool.jobs.reserve(scaled.size());
  for (std::size_t i : set_a) pool.jobs.push_back(scaled[i]);
  for (std::size_t i : set_b) pool.jobs.push_back(scaled[i]);

  Schedule schedule;
  schedule.policy = Policy::MkJr;
  // No closed-form prediction: jobs run at their own allocations, so the
  // all-slots pipeline formula does not describe this schedule.
  schedule.pools.push_back(std::move(pool));
  return schedule;
}

namespace {

struct PoolCandidate {
  ClusterConfig pool1;
  ClusterConfig pool2;
  bool whole_cluster = false;  // single-pool candidate; pool2 unused
};

struct CandidateOutcome {
  Rational cost;  // max pool makespan
  std::vector<PoolSchedule> pools;
};

// Greedy assignment: jobs by descending reference map+reduce duration
// (input order on ties), each placed in the pool whose resulting
// Johnson-predicted makespan is smaller (pool 1 on ties).
CandidateOutcome evaluate_candidate(const Workload& workload,
                                    const PoolCandidate& candidate) {
  std::vector<std::size_t> order(workload.jobs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return workload.jobs[a].map_duration + workload.jobs[a].reduce_duration >
           workload.jobs[b].map_duration + workload.jobs[b].reduce_duration;
  });

  std::vector<ClusterConfig> pool_slots{candidate.pool1};
  if (!candidate.whole_cluster) pool_slots.push_back(candidate.pool2);

  std::vector<std::vector<ScaledJob>> members(pool_slots.size());
  std::vector<Rational> makespans(pool_slots.size(), Rational(0));

  for (std::size_t index : order) {
    const JobSpec& job = workload.jobs[index];
    std::size_t best_pool = 0;
    Rational best_makespan;
    std::vector<ScaledJob> best_members;
    for (std::size_t p = 0; p < pool_slots.size(); ++p) {
      std::vector<ScaledJob> trial = members[p];
      trial.push_back(clamp_and_scale(job, pool_slots[p]));
      Rational trial_makespan =
          closed_form_makespan(johnson_order(as_johnson_jobs(trial))).makespan;
      if (p == 0 || trial_makespan < best_makespan) {
        best_pool = p;
        best_makespan = trial_makespan;
        best_members = std::move(trial);
      }
    }
    members[best_pool] = std::move(best_members);
    makespans[best_pool] = best_makespan;
  }

  CandidateOutcome outcome;
  outcome.cost = *std::max_element(makespans.begin(), makespans.end());
  for (std::size_t p = 0; p < pool_slots.size(); ++p) {
    outcome.pools.push_back(make_johnson_pool(pool_slots[p], std::move(members[p])));
  }
  return outcome;
}

}  // namespace

Schedule balanced_pools_schedule(const Workload& workload,
                                 const BalancedPoolsOptions& options) {
  const int map_total = workload.cluster.map_slots;
  const int reduce_total = workload.cluster.reduce_slots;
  if (map_total < 2 || reduce_total < 2) {
    throw ConfigError("balanced pools needs at least 2 slots per stage, cluster is " +
                      std::to_string(map_total) + "x" + std::to_string(reduce_total));
  }

  std::vector<PoolCandidate> candidates;
  if (options.grid == BalancedPoolsOptions::Grid::kProportional) {
    for (int s = 1; s < map_total; ++s) {
      // r/reduce_total == s/map_total, integer r only.
      if ((static_cast<long long>(s) * reduce_total) % map_total != 0) continue;
      const int r = static_cast<int>(static_cast<long long>(s) * reduce_total / map_total);
      if (r < 1 || r >= reduce_total) continue;
      candidates.push_back({{s, r}, {map_total - s, reduce_total - r}, false});
    }
  } else {
    for (int s = 1; s < map_total; ++s) {
      for (int r = 1; r < reduce_total; ++r) {
        candidates.push_back({{s, r}, {map_total - s, reduce_total - r}, false});
      }
    }
  }
  if (options.include_whole_cluster) {
    candidates.push_back({workload.cluster, {}, true});
  }
  if (candidates.empty()) {
    throw ConfigError("no feasible pool split for cluster " + std::to_string(map_total) +
                      "x" + std::to_string(reduce_total));
  }

  // Candidates are independent; evaluate in parallel, reduce in grid order.
  std::vector<CandidateOutcome> outcomes(candidates.size());
  run_chunked(candidates.size(), [&](std::size_t i) {
    outcomes[i] = evaluate_candidate(workload, candidates[i]);
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    if (outcomes[i].cost < outcomes[best].cost) best = i;
  }

  Schedule schedule;
  schedule.policy = Policy::BalancedPools;
  schedule.pools = std::move(outcomes[best].pools);
  schedule.predicted_makespan = outcomes[best].cost;
  return schedule;
}

Schedule fix_pools_and_assignment(const Workload& workload, const PoolSplit& split,
                                  const std::vector<std::vector<std::string>>& assignment) {
  if (assignment.size() != 2) {
    throw AssignmentError("expected exactly 2 assignment lists, got " +
                          std::to_string(assignment.size()));
  }
  if (split.pool1.map_slots + split.pool2.map_slots > workload.cluster.map_slots ||
      split.pool1.reduce_slots + split.pool2.reduce_slots > workload.cluster.reduce_slots) {
    throw ConfigError("pool split exceeds the cluster's slot totals");
  }

  std::map<std::string, const JobSpec*> by_id;
  for (const JobSpec& job : workload.jobs) by_id.emplace(job.id, &job);

  std::map<std::string, int> seen;
  Schedule schedule;
  schedule.policy = Policy::BalancedPools;
  for (std::size_t p = 0; p < 2; ++p) {
    const ClusterConfig& slots = p == 0 ? split.pool1 : split.pool2;
    std::vector<ScaledJob> scaled;
    for (const std::string& id : assignment[p]) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        throw AssignmentError("assignment names unknown job '" + id + "'");
      }
      if (++seen[id] > 1) {
        throw AssignmentError("job '" + id + "' assigned to more than one pool");
      }
      scaled.push_back(clamp_and_scale(*it->second, slots));
    }
    schedule.pools.push_back(make_johnson_pool(slots, std::move(scaled)));
  }
  if (seen.size() != workload.jobs.size()) {
    for (const JobSpec& job : workload.jobs) {
      if (!seen.contains(job.id)) {
        throw AssignmentError("job '" + job.id + "' missing from the assignment");
      }
    }
  }

  schedule.predicted_makespan = std::max(schedule.pools[0].predicted_makespan.value(),
                                         schedule.pools[1].predicted_makespan.value());
  return schedule;
}

}  // namespace mklab

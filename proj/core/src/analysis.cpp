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

#include "mklab/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "mklab/errors.hpp"
#include "mklab/parallel.hpp"
#include "mklab/simulator.hpp"

namespace mklab {

namespace {

// Permutations are evaluated over integers: scale all durations by the
// least common denominator once, then the inner loop is pure cpp_int
// arithmetic (no gcd normalization per step). Exactness is preserved.
struct IntegerDurations {
  std::vector<BigInt> map;
  std::vector<BigInt> reduce;
  BigInt denominator = 1;
};

IntegerDurations to_integer_durations(std::span<const JohnsonJob> jobs) {
  IntegerDurations result;
  for (const JohnsonJob& job : jobs) {
    result.denominator = boost::multiprecision::lcm(
        result.denominator, boost::multiprecision::denominator(job.map_duration));
    result.denominator = boost::multiprecision::lcm(
        result.denominator, boost::multiprecision::denominator(job.reduce_duration));
  }
  for (const JohnsonJob& job : jobs) {
    result.map.push_back(boost::multiprecision::numerator(job.map_duration) *
                         (result.denominator /
                          boost::multiprecision::denominator(job.map_duration)));
    result.reduce.push_back(boost::multiprecision::numerator(job.reduce_duration) *
                            (result.denominator /
                             boost::multiprecision::denominator(job.reduce_duration)));
  }
  return result;
}

// sum reduce + max_u(prefix map_u - prefix reduce_{u-1}), over integers.
BigInt integer_makespan(const IntegerDurations& durations,
                        const std::vector<std::size_t>& order) {
  BigInt prefix_map = 0;
  BigInt prefix_reduce = 0;
  BigInt best_gap;
  bool first = true;
  for (std::size_t i : order) {
    prefix_map += durations.map[i];
    BigInt gap = prefix_map - prefix_reduce;
    if (first || gap > best_gap) {
      best_gap = std::move(gap);
      first = false;
    }
    prefix_reduce += durations.reduce[i];
  }
  return prefix_reduce + best_gap;
}

}  // namespace

BruteForceResult brute_force_best_order(std::span<const JohnsonJob> jobs) {
  const std::size_t n = jobs.size();
  if (n > kBruteForceMaxJobs) {
    throw ParameterError("brute-force order search is limited to " +
                         std::to_string(kBruteForceMaxJobs) + " jobs (" +
                         std::to_string(n) + " given); the search is factorial");
  }

  BruteForceResult result;
  result.makespan = 0;
  if (n == 0) return result;

  const IntegerDurations durations = to_integer_durations(jobs);

  // One chunk per leading job; each chunk walks its permutations in
  // lexicographic order, so reducing chunks in order keeps the overall
  // lexicographically-first optimum, identical to a serial scan.
  struct ChunkBest {
    BigInt makespan;
    std::vector<std::size_t> order;
  };
  std::vector<ChunkBest> chunk_best(n);

  run_chunked(n, [&](std::size_t first) {
    std::vector<std::size_t> order;
    order.reserve(n);
    order.push_back(first);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != first) order.push_back(i);
    }
    ChunkBest best{integer_makespan(durations, order), order};
    while (std::next_permutation(order.begin() + 1, order.end())) {
      BigInt makespan = integer_makespan(durations, order);
      if (makespan < best.makespan) {
        best.makespan = std::move(makespan);
        best.order = order;
      }
    }
    chunk_best[first] = std::move(best);
  });

  std::size_t winner = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (chunk_best[i].makespan < chunk_best[winner].makespan) winner = i;
  }

  result.makespan = Rational(chunk_best[winner].makespan, durations.denominator);
  for (std::size_t i : chunk_best[winner].order) {
    result.order.job_ids.push_back(jobs[i].id);
    result.order.durations.push_back({jobs[i].map_duration, jobs[i].reduce_duration});
  }
  return result;
}

namespace {

std::vector<JohnsonJob> uaas_rescaled_jobs(const Workload& workload) {
  std::vector<JohnsonJob> jobs;
  jobs.reserve(workload.jobs.size());
  for (const JobSpec& job : workload.jobs) {
    const ScaledJob scaled =
        scale_durations(job, workload.cluster.map_slots, workload.cluster.reduce_slots);
    jobs.push_back({scaled.id, scaled.eff_map_duration, scaled.eff_reduce_duration});
  }
  return jobs;
}

}  // namespace

SigmaReport sigma_bound(const Workload& workload) {
  const OrderedSequence sequence = johnson_order(uaas_rescaled_jobs(workload));
  const Rational optimal = closed_form_makespan(sequence).makespan;
  if (optimal == 0) {
    throw ParameterError("sigma is undefined: the optimal makespan is zero");
  }

  // Worst prefix map load (maps serialize under all-slots execution, so the
  // prefix maximum is the total map work) plus the largest single rescaled
  // reduce duration. On the worst-case pair this is (c0+1) + c0 and
  // sigma = (2*c0+1)/(c0+2).
  Rational map_load = 0;
  Rational worst_reduce = 0;
  for (const StageDurations& d : sequence.durations) {
    map_load += d.map;
    worst_reduce = std::max(worst_reduce, d.reduce);
  }

  SigmaReport report;
  report.optimal_makespan = optimal;
  report.sigma = (map_load + worst_reduce) / optimal;
  report.bound = 1 + report.sigma;
  report.mkjr_makespan = simulate_fifo(mk_jr_schedule(workload)).makespan;
  report.guarantee_holds = report.mkjr_makespan <= optimal + map_load + worst_reduce;
  return report;
}

Workload worst_case_instance(const Rational& c0) {
  if (c0 <= 1) {
    throw ParameterError("the worst-case construction needs c0 > 1, got " +
                         to_exact_string(c0));
  }
  Workload workload;
  workload.cluster = {10, 10};
  workload.jobs.push_back({"J1", 10, 10, 1, c0, std::nullopt, std::nullopt});
  workload.jobs.push_back({"J2", 10, 10, c0, 1, std::nullopt, std::nullopt});
  return workload;
}

namespace {

std::vector<std::string> order_ids(const Schedule& schedule) {
  std::vector<std::string> ids;
  for (const PoolSchedule& pool : schedule.pools) {
    for (const ScaledJob& job : pool.jobs) ids.push_back(job.id);
  }
  return ids;
}

int scale_slot_count(int slots, const Rational& rho0, const char* stage) {
  const Rational scaled = slots / rho0;
  if (boost::multiprecision::denominator(scaled) != 1 || scaled < 1) {
    throw ParameterError(std::string("scaling ") + stage + " slots by rho0 = " +
                         to_exact_string(rho0) + " gives " + to_exact_string(scaled) +
                         ", not a positive integer");
  }
  return static_cast<int>(boost::multiprecision::numerator(scaled));
}

}  // namespace

StabilityReport stability_check(const Workload& workload,
                                std::span<const Rational> scale_factors) {
  StabilityReport report;
  const Schedule base_uaas = uaas_schedule(workload);
  report.baseline_uaas_order = order_ids(base_uaas);
  report.baseline_uaas_makespan = base_uaas.predicted_makespan.value();
  report.baseline_mkjr_order = order_ids(mk_jr_schedule(workload));

  for (const Rational& rho0 : scale_factors) {
    if (rho0 <= 0) {
      throw ParameterError("scale factor rho0 must be > 0, got " + to_exact_string(rho0));
    }
    Workload scaled = workload;
    scaled.cluster.map_slots = scale_slot_count(workload.cluster.map_slots, rho0, "map");
    scaled.cluster.reduce_slots =
        scale_slot_count(workload.cluster.reduce_slots, rho0, "reduce");

    StabilityEntry entry;
    entry.rho0 = rho0;
    entry.scaled_cluster = scaled.cluster;

    const Schedule uaas = uaas_schedule(scaled);
    entry.uaas_order = order_ids(uaas);
    entry.uaas_makespan = uaas.predicted_makespan.value();
    entry.uaas_order_unchanged = entry.uaas_order == report.baseline_uaas_order;
    entry.uaas_makespan_scaled_exactly =
        entry.uaas_makespan == report.baseline_uaas_makespan * rho0;

    entry.mkjr_order = order_ids(mk_jr_schedule(scaled));
    entry.mkjr_order_changed = entry.mkjr_order != report.baseline_mkjr_order;

    report.entries.push_back(std::move(entry));
  }
  return report;
}

RatioSweepResult ratio_sweep(const Workload& workload, int total_slots,
                             const OrderedSequence& order) {
  if (total_slots < 2) {
    throw ParameterError("ratio sweep needs a slot budget of at least 2, got " +
                         std::to_string(total_slots));
  }

  std::map<std::string, const JobSpec*> by_id;
  for (const JobSpec& job : workload.jobs) by_id.emplace(job.id, &job);
  if (order.size() != workload.jobs.size()) {
    throw ParameterError("sweep order must cover every workload job exactly once");
  }

  // Per-job stage work from task-level times, in the fixed order.
  std::vector<Rational> map_work, reduce_work;
  std::map<std::string, int> uses;
  for (const std::string& id : order.job_ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw ParameterError("sweep order names unknown job '" + id + "'");
    }
    if (++uses[id] > 1) {
      throw ParameterError("sweep order repeats job '" + id + "'");
    }
    const JobSpec& job = *it->second;
    if (!job.map_tasks || !job.reduce_tasks) {
      throw DataError("job '" + id + "' carries no task-level times; the ratio sweep " +
                      "is defined on per-task workloads");
    }
    Rational m = 0, r = 0;
    for (const Rational& t : *job.map_tasks) m += t;
    for (const Rational& t : *job.reduce_tasks) r += t;
    map_work.push_back(m);
    reduce_work.push_back(r);
  }

  const std::size_t n = order.size();
  RatioSweepResult result;
  result.points.resize(total_slots - 1);

  run_chunked(result.points.size(), [&](std::size_t chunk) {
    const int m = static_cast<int>(chunk) + 1;
    const int r = total_slots - m;
    // max over k of (map prefix through k)/m + (reduce suffix from k)/r.
    std::vector<Rational> reduce_suffix(n + 1, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
      reduce_suffix[i] = reduce_suffix[i + 1] + reduce_work[i];
    }
    Rational best = 0;
    Rational map_prefix = 0;
    for (std::size_t k = 0; k < n; ++k) {
      map_prefix += map_work[k];
      const Rational value = map_prefix / m + reduce_suffix[k] / r;
      if (k == 0 || value > best) best = value;
    }
    result.points[chunk] = {Rational(m, r), m, r, best};
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < result.points.size(); ++i) {
    if (result.points[i].makespan < result.points[best].makespan) best = i;
  }
  result.best = result.points[best];
  return result;
}

ComparisonReport compare_report(const Workload& workload) {
  ComparisonReport report;

  auto run_policy = [](const Schedule& schedule) {
    PolicyOutcome outcome;
    outcome.policy = schedule.policy;
    for (const PoolSchedule& pool : schedule.pools) {
      outcome.pool_orders.push_back(pool.job_ids());
      outcome.pool_slots.push_back(pool.slots);
    }
    outcome.simulated_makespan = simulate_fifo(schedule).makespan;
    outcome.predicted_makespan = schedule.predicted_makespan;
    return outcome;
  };

  report.uaas = run_policy(uaas_schedule(workload));
  report.mkjr = run_policy(mk_jr_schedule(workload));
  try {
    report.pools = run_policy(balanced_pools_schedule(workload));
  } catch (const ConfigError&) {
    report.pools.reset();  // cluster too small to split
  }

  auto gap = [&](const Rational& makespan) -> Rational {
    if (report.uaas.simulated_makespan == 0) {
      return makespan == 0 ? Rational(0) : Rational(-1);
    }
    return makespan / report.uaas.simulated_makespan - 1;
  };
  report.uaas.gap_vs_uaas = 0;
  report.mkjr.gap_vs_uaas = gap(report.mkjr.simulated_makespan);
  if (report.pools) report.pools->gap_vs_uaas = gap(report.pools->simulated_makespan);

  const SigmaReport sigma = sigma_bound(workload);
  report.sigma = sigma.sigma;
  report.bound = sigma.bound;
  report.optimal_makespan = sigma.optimal_makespan;

  if (workload.jobs.size() <= kBruteForceMaxJobs) {
    report.oracle = brute_force_best_order(uaas_rescaled_jobs(workload));
  }
  return report;
}

}  // namespace mklab

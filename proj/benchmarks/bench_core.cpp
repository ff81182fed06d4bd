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

#include <benchmark/benchmark.h>

#include "mklab/analysis.hpp"
#include "mklab/generator.hpp"
#include "mklab/simulator.hpp"

namespace {

using namespace mklab;

Workload make_workload(int n, int map_slots = 30, int reduce_slots = 30) {
  GeneratorConfig config;
  config.seed = 99;
  config.n = n;
  config.cluster = {map_slots, reduce_slots};
  return generate_workload(config);
}

std::vector<JohnsonJob> rescaled(const Workload& w) {
  std::vector<JohnsonJob> jobs;
  for (const JobSpec& job : w.jobs) {
    const ScaledJob s = scale_durations(job, w.cluster.map_slots, w.cluster.reduce_slots);
    jobs.push_back({s.id, s.eff_map_duration, s.eff_reduce_duration});
  }
  return jobs;
}

void BM_JohnsonOrder(benchmark::State& state) {
  const auto jobs = rescaled(make_workload(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(johnson_order(jobs));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JohnsonOrder)->RangeMultiplier(10)->Range(10, 10000)->Complexity();

void BM_ClosedFormMakespan(benchmark::State& state) {
  const OrderedSequence sequence =
      johnson_order(rescaled(make_workload(static_cast<int>(state.range(0)))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_makespan(sequence));
  }
}
BENCHMARK(BM_ClosedFormMakespan)->Arg(100)->Arg(1000);

void BM_SimulateFifoMkJr(benchmark::State& state) {
  const Schedule schedule = mk_jr_schedule(make_workload(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_fifo(schedule));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SimulateFifoMkJr)->Arg(10)->Arg(50)->Arg(200)->Complexity();

void BM_BruteForceBestOrder(benchmark::State& state) {
  const auto jobs = rescaled(make_workload(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_best_order(jobs));
  }
}
BENCHMARK(BM_BruteForceBestOrder)->DenseRange(6, 9);

void BM_BalancedPoolsSearch(benchmark::State& state) {
  const Workload workload = make_workload(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(balanced_pools_schedule(workload));
  }
}
BENCHMARK(BM_BalancedPoolsSearch)->Arg(5)->Arg(10);

void BM_RatioSweep(benchmark::State& state) {
  Workload workload = make_workload(static_cast<int>(state.range(0)), 20, 20);
  for (JobSpec& job : workload.jobs) {
    job.map_tasks =
        std::vector<Rational>(job.map_demand, job.map_duration);
    job.reduce_tasks =
        std::vector<Rational>(job.reduce_demand, job.reduce_duration);
  }
  const OrderedSequence order = uaas_schedule(workload).pools[0].sequence();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratio_sweep(workload, 40, order));
  }
}
BENCHMARK(BM_RatioSweep)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();

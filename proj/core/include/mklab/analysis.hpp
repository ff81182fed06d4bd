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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mklab/johnson.hpp"
#include "mklab/schedulers.hpp"
#include "mklab/workload.hpp"

namespace mklab {

// Ground-truth and theory checks: brute-force order search, the sigma
// approximation bound and its worst-case family, order-stability checks
// under cluster rescaling, slot-ratio sweeps, and cross-policy comparison.

inline constexpr std::size_t kBruteForceMaxJobs = 10;

struct BruteForceResult {
  OrderedSequence order;
  Rational makespan;
};

// Exact minimum makespan over all n! orders of jobs at a fixed (full
// cluster) allocation. Ties resolve to the lexicographically first
// permutation of input positions. Independent of johnson_order; this is the
// optimality oracle. Throws ParameterError for n > 10.
BruteForceResult brute_force_best_order(std::span<const JohnsonJob> jobs);

// sigma = (sum of rescaled map durations + largest rescaled reduce
// duration) / optimal makespan, with durations rescaled to the whole
// cluster and taken in Johnson order. 1 + sigma bounds MK_JR's makespan
// against the optimum; sigma is at most 2, so MK_JR is a 3-approximation.
struct SigmaReport {
  Rational sigma;
  Rational bound;             // 1 + sigma
  Rational optimal_makespan;  // closed form on the UAAS-rescaled Johnson order
  Rational mkjr_makespan;     // simulated MK_JR makespan on the same workload
  bool guarantee_holds = false;  // mkjr_makespan <= bound * optimal_makespan
};

// Throws ParameterError when the optimal makespan is zero (sigma undefined).
SigmaReport sigma_bound(const Workload& workload);

// The worst-case pair for the MK_JR bound: two whole-cluster jobs with
// durations (1, c0) and (c0, 1). Optimal makespan c0 + 2 and
// sigma = (2*c0 + 1) / (c0 + 2), which approaches 2 from below.
// Requires c0 > 1 (the construction degenerates otherwise).
Workload worst_case_instance(const Rational& c0);

struct StabilityEntry {
  Rational rho0;  // old slots / new slots, applied to both stages
  ClusterConfig scaled_cluster;
  std::vector<std::string> uaas_order;
  Rational uaas_makespan;
  bool uaas_order_unchanged = false;
  bool uaas_makespan_scaled_exactly = false;  // new == old * rho0
  std::vector<std::string> mkjr_order;
  bool mkjr_order_changed = false;
};

struct StabilityReport {
  std::vector<std::string> baseline_uaas_order;
  Rational baseline_uaas_makespan;
  std::vector<std::string> baseline_mkjr_order;
  std::vector<StabilityEntry> entries;
};

// Rescales the cluster by each factor rho0 (new slots = old / rho0, which
// must stay a positive integer; ParameterError otherwise) and reports
// whether UAAS kept its order and scaled its makespan by exactly rho0, and
// whether MK_JR's order moved.
StabilityReport stability_check(const Workload& workload,
                                std::span<const Rational> scale_factors);

struct RatioSweepPoint {
  Rational rho;  // map slots / reduce slots
  int map_slots = 0;
  int reduce_slots = 0;
  Rational makespan;
};

struct RatioSweepResult {
  std::vector<RatioSweepPoint> points;
  RatioSweepPoint best;  // minimal makespan, smallest rho on ties
};

// For every split (m, total_slots - m) of a fixed slot budget, evaluates
// the fixed-order pipeline makespan
//   max_k ( sum_{i<=k} mapwork_i / m  +  sum_{i>=k} reducework_i / (total-m) )
// with per-job stage work taken from task-level times. Every job in `order`
// must carry both task lists (DataError otherwise); total_slots >= 2.
RatioSweepResult ratio_sweep(const Workload& workload, int total_slots,
                             const OrderedSequence& order);

struct PolicyOutcome {
  Policy policy = Policy::Custom;
  std::vector<std::vector<std::string>> pool_orders;
  std::vector<ClusterConfig> pool_slots;
  Rational simulated_makespan;
  std::optional<Rational> predicted_makespan;
  Rational gap_vs_uaas;  // (simulated - uaas simulated) / uaas simulated
};

struct ComparisonReport {
  PolicyOutcome uaas;
  PolicyOutcome mkjr;
  std::optional<PolicyOutcome> pools;  // absent when the cluster cannot split
  Rational sigma;
  Rational bound;
  Rational optimal_makespan;
  std::optional<BruteForceResult> oracle;  // present when n <= 10
};

// Runs all three policies (and the brute-force oracle when it fits),
// simulates each schedule, and reports makespans, gaps against UAAS, and
// the sigma bound.
ComparisonReport compare_report(const Workload& workload);

}  // namespace mklab

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

#include "mklab/report_io.hpp"

#include <json.hpp>

namespace mklab {

namespace {

using nlohmann::json;

json number(const Rational& value) {
  return {{"exact", to_exact_string(value)}, {"decimal", to_decimal_string(value)}};
}

json gap(const Rational& value) {
  json j = number(value);
  j["percent"] = to_decimal_string(value * 100, 6);
  return j;
}

json cluster_json(const ClusterConfig& cluster) {
  return {{"map_slots", cluster.map_slots}, {"reduce_slots", cluster.reduce_slots}};
}

json pool_json(const PoolSchedule& pool) {
  json j;
  j["slots"] = cluster_json(pool.slots);
  j["predicted_makespan"] =
      pool.predicted_makespan ? number(*pool.predicted_makespan) : json(nullptr);
  json jobs = json::array();
  for (const ScaledJob& job : pool.jobs) {
    jobs.push_back({{"id", job.id},
                    {"alloc_map", job.alloc_map},
                    {"alloc_reduce", job.alloc_reduce},
                    {"eff_map_duration", number(job.eff_map_duration)},
                    {"eff_reduce_duration", number(job.eff_reduce_duration)}});
  }
  j["jobs"] = std::move(jobs);
  return j;
}

json outcome_json(const PolicyOutcome& outcome) {
  json j;
  j["policy"] = std::string(policy_name(outcome.policy));
  j["pool_orders"] = outcome.pool_orders;
  json slots = json::array();
  for (const ClusterConfig& pool : outcome.pool_slots) slots.push_back(cluster_json(pool));
  j["pool_slots"] = std::move(slots);
  j["makespan"] = number(outcome.simulated_makespan);
  j["predicted_makespan"] =
      outcome.predicted_makespan ? number(*outcome.predicted_makespan) : json(nullptr);
  j["gap_vs_uaas"] = gap(outcome.gap_vs_uaas);
  return j;
}

}  // namespace

std::string schedule_to_json(const Schedule& schedule) {
  json j;
  j["policy"] = std::string(policy_name(schedule.policy));
  j["predicted_makespan"] =
      schedule.predicted_makespan ? number(*schedule.predicted_makespan) : json(nullptr);
  json pools = json::array();
  for (const PoolSchedule& pool : schedule.pools) pools.push_back(pool_json(pool));
  j["pools"] = std::move(pools);
  return j.dump(2) + "\n";
}

std::string comparison_report_to_json(const ComparisonReport& report) {
  json j;
  j["policies"] = json::array();
  j["policies"].push_back(outcome_json(report.uaas));
  j["policies"].push_back(outcome_json(report.mkjr));
  if (report.pools) {
    j["policies"].push_back(outcome_json(*report.pools));
  }
  j["sigma"] = number(report.sigma);
  j["bound"] = number(report.bound);
  j["optimal_makespan"] = number(report.optimal_makespan);
  if (report.oracle) {
    j["oracle"] = {{"order", report.oracle->order.job_ids},
                   {"makespan", number(report.oracle->makespan)}};
  } else {
    j["oracle"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string stability_report_to_json(const StabilityReport& report) {
  json j;
  j["baseline"] = {{"uaas_order", report.baseline_uaas_order},
                   {"uaas_makespan", number(report.baseline_uaas_makespan)},
                   {"mkjr_order", report.baseline_mkjr_order}};
  json entries = json::array();
  for (const StabilityEntry& entry : report.entries) {
    entries.push_back({{"rho0", number(entry.rho0)},
                       {"scaled_cluster", cluster_json(entry.scaled_cluster)},
                       {"uaas_order", entry.uaas_order},
                       {"uaas_makespan", number(entry.uaas_makespan)},
                       {"uaas_order_unchanged", entry.uaas_order_unchanged},
                       {"uaas_makespan_scaled_exactly", entry.uaas_makespan_scaled_exactly},
                       {"mkjr_order", entry.mkjr_order},
                       {"mkjr_order_changed", entry.mkjr_order_changed}});
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

std::string ratio_sweep_to_json(const RatioSweepResult& result) {
  auto point_json = [](const RatioSweepPoint& point) {
    return json{{"rho", number(point.rho)},
                {"map_slots", point.map_slots},
                {"reduce_slots", point.reduce_slots},
                {"makespan", number(point.makespan)}};
  };
  json j;
  j["points"] = json::array();
  for (const RatioSweepPoint& point : result.points) j["points"].push_back(point_json(point));
  j["best"] = point_json(result.best);
  return j.dump(2) + "\n";
}

std::string oracle_result_to_json(const BruteForceResult& result,
                                  const Rational& uaas_makespan) {
  json j;
  j["order"] = result.order.job_ids;
  j["makespan"] = number(result.makespan);
  j["uaas_makespan"] = number(uaas_makespan);
  j["uaas_is_optimal"] = result.makespan == uaas_makespan;
  return j.dump(2) + "\n";
}

}  // namespace mklab

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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mklab/analysis.hpp"
#include "mklab/errors.hpp"
#include "mklab/generator.hpp"
#include "mklab/report_io.hpp"
#include "mklab/simulator.hpp"
#include "mklab/workload_io.hpp"

namespace {

// Exit codes: 0 success, 1 internal, 2 missing file, 3 parse error,
// 4 validation error, 5 bad parameters/configuration.
constexpr int kExitInternal = 1;
constexpr int kExitFileNotFound = 2;
constexpr int kExitParse = 3;
constexpr int kExitValidation = 4;
constexpr int kExitDomain = 5;

struct CommonOptions {
  std::string workload_path;
  std::string out_path;
  std::string policy = "uaas";
};

mklab::Workload load_validated(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw mklab::IoError("workload file not found: '" + path + "'");
  }
  return mklab::validate_workload(mklab::load_workload_file(path));
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream stream(out_path);
  if (!stream) {
    throw mklab::IoError("cannot open '" + out_path + "' for writing");
  }
  stream << content;
  if (!stream) {
    throw mklab::IoError("failed writing '" + out_path + "'");
  }
}

mklab::Schedule schedule_for(const std::string& policy, const mklab::Workload& workload) {
  if (policy == "uaas") return mklab::uaas_schedule(workload);
  if (policy == "mkjr") return mklab::mk_jr_schedule(workload);
  if (policy == "pools") return mklab::balanced_pools_schedule(workload);
  throw mklab::ParameterError("unknown policy '" + policy + "'");
}

// Re-derives every stage duration with the discrete wave rule; sensitivity
// mode only, demands task-level workloads.
void apply_wave_durations(mklab::Schedule& schedule, const mklab::Workload& workload) {
  for (mklab::PoolSchedule& pool : schedule.pools) {
    pool.predicted_makespan.reset();
    for (mklab::ScaledJob& scaled : pool.jobs) {
      const mklab::JobSpec* spec = nullptr;
      for (const mklab::JobSpec& job : workload.jobs) {
        if (job.id == scaled.id) spec = &job;
      }
      if (spec == nullptr || !spec->map_tasks || !spec->reduce_tasks) {
        throw mklab::DataError("job '" + scaled.id +
                               "' carries no task-level times; the wave duration model "
                               "needs map_tasks/reduce_tasks");
      }
      scaled.eff_map_duration =
          mklab::wave_duration_from_tasks(*spec->map_tasks, scaled.alloc_map);
      scaled.eff_reduce_duration =
          mklab::wave_duration_from_tasks(*spec->reduce_tasks, scaled.alloc_reduce);
    }
  }
  schedule.predicted_makespan.reset();
}

std::pair<mklab::Rational, mklab::Rational> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw mklab::ParseError("range must look like LO:HI, got '" + text + "'");
  }
  return {mklab::parse_rational(text.substr(0, colon)),
          mklab::parse_rational(text.substr(colon + 1))};
}

std::vector<mklab::Rational> parse_scale_list(const std::string& text) {
  std::vector<mklab::Rational> factors;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto comma = text.find(',', begin);
    const std::string item =
        text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
    if (!item.empty()) factors.push_back(mklab::parse_rational(item));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  if (factors.empty()) {
    throw mklab::ParseError("no scale factors in '" + text + "'");
  }
  return factors;
}

int run(int argc, char** argv) {
  CLI::App app{"makespan-lab: two-stage MapReduce makespan laboratory"};
  app.require_subcommand(1);

  CommonOptions options;
  std::string duration_model = "fluid";
  int total_slots = 0;
  std::string scale_list = "1/2,2,3";

  std::uint64_t seed = 0;
  int gen_n = 5;
  int gen_map_slots = 30;
  int gen_reduce_slots = 30;
  std::string duration_range = "1:20";
  std::string demand_range;

  auto add_workload = [&](CLI::App* cmd) {
    cmd->add_option("--workload", options.workload_path, "workload file to load")
        ->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", options.out_path, "output path (stdout when omitted)");
  };
  auto add_policy = [&](CLI::App* cmd) {
    cmd->add_option("--policy", options.policy, "scheduling policy")
        ->check(CLI::IsMember({"uaas", "mkjr", "pools"}))
        ->default_val("uaas");
  };

  CLI::App* schedule_cmd =
      app.add_subcommand("schedule", "compute a policy's schedule and predictions");
  add_workload(schedule_cmd);
  add_policy(schedule_cmd);
  add_out(schedule_cmd);

  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "replay a policy's schedule; emits Gantt CSV");
  add_workload(simulate_cmd);
  add_policy(simulate_cmd);
  add_out(simulate_cmd);
  simulate_cmd
      ->add_option("--duration-model", duration_model,
                   "stage duration model (wave is a sensitivity mode for "
                   "task-level workloads)")
      ->check(CLI::IsMember({"fluid", "wave"}))
      ->default_val("fluid");

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "run all policies, the oracle and the sigma bound");
  add_workload(compare_cmd);
  add_out(compare_cmd);

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep-ratio", "makespan across integer map/reduce slot splits of a budget");
  add_workload(sweep_cmd);
  add_out(sweep_cmd);
  sweep_cmd->add_option("--total-slots", total_slots, "total slot budget to split")
      ->required();

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exact brute-force best order (n <= 10)");
  add_workload(oracle_cmd);
  add_out(oracle_cmd);

  CLI::App* stability_cmd = app.add_subcommand(
      "stability", "order stability under uniform cluster rescaling");
  add_workload(stability_cmd);
  add_out(stability_cmd);
  stability_cmd->add_option("--scale", scale_list,
                            "comma-separated rho0 factors (old slots / new slots)");

  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a seeded random workload");
  add_out(gen_cmd);
  gen_cmd->add_option("--seed", seed, "random seed")->default_val(0);
  gen_cmd->add_option("--n", gen_n, "number of jobs")->default_val(5);
  gen_cmd->add_option("--map-slots", gen_map_slots, "cluster map slots")->default_val(30);
  gen_cmd->add_option("--reduce-slots", gen_reduce_slots, "cluster reduce slots")
      ->default_val(30);
  gen_cmd->add_option("--duration-range", duration_range, "stage duration range LO:HI")
      ->default_val("1:20");
  gen_cmd->add_option("--demand-range", demand_range,
                      "slot demand range LO:HI (defaults to 1:capacity)");

  CLI11_PARSE(app, argc, argv);

  if (schedule_cmd->parsed()) {
    const mklab::Workload workload = load_validated(options.workload_path);
    write_output(options.out_path,
                 mklab::schedule_to_json(schedule_for(options.policy, workload)));
    return 0;
  }

  if (simulate_cmd->parsed()) {
    const mklab::Workload workload = load_validated(options.workload_path);
    mklab::Schedule schedule = schedule_for(options.policy, workload);
    if (duration_model == "wave") apply_wave_durations(schedule, workload);
    const mklab::Timeline timeline = mklab::simulate_fifo(schedule);
    const auto violations = mklab::verify_timeline(timeline, schedule, workload.cluster);
    if (!violations.empty()) {
      for (const mklab::TimelineViolation& v : violations) {
        std::cerr << "violation [" << v.kind << "] " << v.job_id << ": " << v.detail
                  << "\n";
      }
      return kExitInternal;
    }
    write_output(options.out_path, mklab::format_gantt_csv(timeline));
    std::cerr << "makespan " << mklab::to_exact_string(timeline.makespan) << " ("
              << mklab::to_decimal_string(timeline.makespan) << ")\n";
    return 0;
  }

  if (compare_cmd->parsed()) {
    const mklab::Workload workload = load_validated(options.workload_path);
    write_output(options.out_path,
                 mklab::comparison_report_to_json(mklab::compare_report(workload)));
    return 0;
  }

  if (sweep_cmd->parsed()) {
    const mklab::Workload workload = load_validated(options.workload_path);
    // The fixed order is UAAS's order on the file's own cluster.
    const mklab::OrderedSequence order =
        mklab::uaas_schedule(workload).pools.front().sequence();
    write_output(options.out_path, mklab::ratio_sweep_to_json(
                                       mklab::ratio_sweep(workload, total_slots, order)));
    return 0;
  }

  if (oracle_cmd->parsed()) {
    const mklab::Workload workload = load_validated(options.workload_path);
    std::vector<mklab::JohnsonJob> jobs;
    for (const mklab::JobSpec& job : workload.jobs) {
      const mklab::ScaledJob scaled = mklab::scale_durations(
          job, workload.cluster.map_slots, workload.cluster.reduce_slots);
      jobs.push_back({scaled.id, scaled.eff_map_duration, scaled.eff_reduce_duration});
    }
    const mklab::BruteForceResult result = mklab::brute_force_best_order(jobs);
    const mklab::Rational uaas = mklab::uaas_schedule(workload).predicted_makespan.value();
    write_output(options.out_path, mklab::oracle_result_to_json(result, uaas));
    return 0;
  }

  if (stability_cmd->parsed()) {
    const mklab::Workload workload = load_validated(options.workload_path);
    const std::vector<mklab::Rational> factors = parse_scale_list(scale_list);
    write_output(options.out_path, mklab::stability_report_to_json(
                                       mklab::stability_check(workload, factors)));
    return 0;
  }

  if (gen_cmd->parsed()) {
    mklab::GeneratorConfig config;
    config.seed = seed;
    config.n = gen_n;
    config.cluster = {gen_map_slots, gen_reduce_slots};
    const auto [dur_lo, dur_hi] = parse_range(duration_range);
    config.duration_lo = dur_lo;
    config.duration_hi = dur_hi;
    if (!demand_range.empty()) {
      const auto [lo, hi] = parse_range(demand_range);
      if (boost::multiprecision::denominator(lo) != 1 ||
          boost::multiprecision::denominator(hi) != 1) {
        throw mklab::ParseError("demand range bounds must be integers");
      }
      config.demand_lo = static_cast<int>(boost::multiprecision::numerator(lo));
      config.demand_hi = static_cast<int>(boost::multiprecision::numerator(hi));
    }
    write_output(options.out_path,
                 mklab::format_workload_text(mklab::generate_workload(config)));
    return 0;
  }

  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mklab::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFileNotFound;
  } catch (const mklab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const mklab::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const mklab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

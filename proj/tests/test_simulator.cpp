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
#include <doctest.h>

#include "mklab/errors.hpp"
#include "test_support.hpp"

using namespace mklab;
using mklab::testing::job;

namespace {

const StageRun& find_run(const Timeline& timeline, const std::string& id, Stage stage) {
  for (const StageRun& run : timeline.runs) {
    if (run.job_id == id && run.stage == stage) return run;
  }
  REQUIRE_MESSAGE(false, "no run for " << id);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("simulate_fifo reproduces the five-job reference timelines") {
  SUBCASE("MK_JR takes 47 time units") {
    const Timeline timeline = simulate_fifo(mk_jr_schedule(testing::table1_workload()));
    CHECK(timeline.makespan == 47);
    // J3's reduce has to wait for J4's 20 reduce slots to free up.
    CHECK(find_run(timeline, "J3", Stage::Reduce).start == 43);
    CHECK(find_run(timeline, "J4", Stage::Reduce).start == 13);
    CHECK(find_run(timeline, "J3", Stage::Map).start == 13);
  }
  SUBCASE("UAAS takes 35 and two thirds") {
    const Timeline timeline = simulate_fifo(uaas_schedule(testing::table1_workload()));
    CHECK(timeline.makespan == Rational(107, 3));
    CHECK(find_run(timeline, "J3", Stage::Reduce).start == 33);
  }
  SUBCASE("empty schedule") {
    const Timeline timeline = simulate_fifo(Schedule{});
    CHECK(timeline.makespan == 0);
    CHECK(timeline.runs.empty());
  }
}

TEST_CASE("simulate_fifo on the two-job example") {
  SUBCASE("MK_JR on the healthy cluster: 35") {
    const Timeline timeline = simulate_fifo(mk_jr_schedule(testing::two_job_workload()));
    CHECK(timeline.makespan == 35);
    // J2's 8-slot map cannot start until J1's 10-slot map releases.
    CHECK(find_run(timeline, "J2", Stage::Map).start == 9);
    CHECK(find_run(timeline, "J2", Stage::Reduce).start == 20);
  }
  SUBCASE("MK_JR after one node fails, fluid model: 32.25") {
    // Under fluid clamping J1's map grows past its reduce, the order flips
    // to [J2, J1], and the simulator measures 129/4. Pinned as this
    // simulator's reference value.
    const Timeline timeline = simulate_fifo(mk_jr_schedule(testing::two_job_workload(8, 8)));
    CHECK(timeline.makespan == Rational(129, 4));
  }
  SUBCASE("UAAS: 18.8") {
    CHECK(simulate_fifo(uaas_schedule(testing::two_job_workload())).makespan ==
          Rational(94, 5));
  }
}

TEST_CASE("simulate_fifo rejects allocations beyond the pool") {
  Schedule schedule;
  schedule.policy = Policy::Custom;
  PoolSchedule pool;
  pool.slots = {4, 4};
  pool.jobs = {{"J1", 5, 1, 2, 2}};
  schedule.pools.push_back(pool);
  CHECK_THROWS_AS(simulate_fifo(schedule), CapacityError);
}

TEST_CASE("verify_timeline") {
  const Workload workload = testing::table1_workload();

  SUBCASE("every simulated timeline is self-consistent") {
    for (const Schedule& schedule :
         {uaas_schedule(workload), mk_jr_schedule(workload),
          balanced_pools_schedule(workload)}) {
      const Timeline timeline = simulate_fifo(schedule);
      CHECK(verify_timeline(timeline, schedule, workload.cluster).empty());
    }
  }

  SUBCASE("overlapping 20+20 reduce gangs on a 30-slot pool is one capacity violation") {
    const Schedule schedule = mk_jr_schedule(workload);
    Timeline timeline = simulate_fifo(schedule);
    // Shift J4's reduce later so it overlaps J3's reduce during [43, 47).
    for (StageRun& run : timeline.runs) {
      if (run.job_id == "J4" && run.stage == Stage::Reduce) {
        run.start = 25;
        run.end = 55;
      }
    }
    timeline.makespan = 55;
    const auto violations = verify_timeline(timeline, schedule, workload.cluster);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == "capacity");
    CHECK(violations[0].detail.find("40 in use") != std::string::npos);
  }

  SUBCASE("a reduce starting before its own map ends is an ordering violation") {
    const Schedule schedule = uaas_schedule(workload);
    Timeline timeline = simulate_fifo(schedule);
    for (StageRun& run : timeline.runs) {
      if (run.job_id == "J3" && run.stage == Stage::Reduce) {
        run.start -= 3;
        run.end -= 3;
      }
    }
    const auto violations = verify_timeline(timeline, schedule, workload.cluster);
    REQUIRE(!violations.empty());
    CHECK(std::any_of(violations.begin(), violations.end(), [](const TimelineViolation& v) {
      return v.kind == "stage_order" && v.job_id == "J3";
    }));
  }

  SUBCASE("a duration that disagrees with the schedule is flagged") {
    const Schedule schedule = uaas_schedule(workload);
    Timeline timeline = simulate_fifo(schedule);
    for (StageRun& run : timeline.runs) {
      if (run.job_id == "J2" && run.stage == Stage::Map) run.end += 1;
    }
    const auto violations = verify_timeline(timeline, schedule, workload.cluster);
    CHECK(std::any_of(violations.begin(), violations.end(), [](const TimelineViolation& v) {
      return v.kind == "duration" && v.job_id == "J2";
    }));
  }
}

TEST_CASE("occupancy ledgers record slots in use per stage") {
  SUBCASE("UAAS five-job run holds all 30 slots of each stage continuously") {
    const Timeline timeline = simulate_fifo(uaas_schedule(testing::table1_workload()));
    CHECK(timeline.map_occupancy ==
          std::vector<OccupancyStep>{{0, 30}, {31, 0}});
    CHECK(timeline.reduce_occupancy ==
          std::vector<OccupancyStep>{{1, 30}, {Rational(107, 3), 0}});
  }
  SUBCASE("MK_JR five-job run steps down when the 20-slot jobs take over") {
    const Timeline timeline = simulate_fifo(mk_jr_schedule(testing::table1_workload()));
    CHECK(timeline.map_occupancy ==
          std::vector<OccupancyStep>{{0, 30}, {7, 20}, {43, 0}});
    CHECK(timeline.reduce_occupancy ==
          std::vector<OccupancyStep>{{1, 30}, {13, 20}, {47, 0}});
  }
}

TEST_CASE("gantt emission") {
  SUBCASE("UAAS five-job timeline: 10 rows, last ends at 107/3") {
    const Timeline timeline = simulate_fifo(uaas_schedule(testing::table1_workload()));
    const std::vector<StageRun> rows = emit_gantt(timeline);
    REQUIRE(rows.size() == 10);
    CHECK(std::is_sorted(rows.begin(), rows.end(),
                         [](const StageRun& a, const StageRun& b) { return a.start < b.start; }));
    CHECK(rows.back().end == Rational(107, 3));
    CHECK(rows.back().job_id == "J3");

    const std::string csv = format_gantt_csv(timeline);
    CHECK(csv.starts_with(
        "job_id,stage,start_decimal,start_exact,end_decimal,end_exact,slots\n"));
    CHECK(csv.find("J3,REDUCE,33,33,35.6666666666667,107/3,30") != std::string::npos);
  }
  SUBCASE("two-job timeline: 4 rows, max end 94/5") {
    const Timeline timeline = simulate_fifo(uaas_schedule(testing::two_job_workload()));
    const std::vector<StageRun> rows = emit_gantt(timeline);
    REQUIRE(rows.size() == 4);
    Rational max_end = 0;
    for (const StageRun& row : rows) max_end = std::max(max_end, row.end);
    CHECK(max_end == Rational(94, 5));
  }
  SUBCASE("empty timeline renders the header only") {
    CHECK(format_gantt_csv(Timeline{}) ==
          "job_id,stage,start_decimal,start_exact,end_decimal,end_exact,slots\n");
  }
}

TEST_CASE("simulator properties on random inputs") {
  testing::Rng rng(31);

  SUBCASE("single-pool all-slots schedules match the closed form exactly") {
    for (int trial = 0; trial < 200; ++trial) {
      const Workload w = testing::random_full_demand_workload(
          rng, rng.draw_int(1, 8), rng.draw_int(1, 10), rng.draw_int(1, 10));
      const Schedule schedule = uaas_schedule(w);
      CHECK(simulate_fifo(schedule).makespan ==
            closed_form_makespan(schedule.pools[0].sequence()).makespan);
    }
  }

  SUBCASE("determinism: identical schedules give identical timelines") {
    for (int trial = 0; trial < 50; ++trial) {
      const Workload w = testing::random_workload(rng, rng.draw_int(1, 6),
                                                  rng.draw_int(2, 8), rng.draw_int(2, 8));
      const Schedule schedule = mk_jr_schedule(w);
      CHECK(simulate_fifo(schedule) == simulate_fifo(schedule));
    }
  }

  SUBCASE("appending a job never shrinks the makespan") {
    for (int trial = 0; trial < 100; ++trial) {
      const Workload w = testing::random_workload(rng, rng.draw_int(2, 7),
                                                  rng.draw_int(2, 8), rng.draw_int(2, 8));
      Schedule schedule = mk_jr_schedule(w);
      Schedule shorter = schedule;
      shorter.pools[0].jobs.pop_back();
      CHECK(simulate_fifo(shorter).makespan <= simulate_fifo(schedule).makespan);
    }
  }

  SUBCASE("capacity is never exceeded") {
    for (int trial = 0; trial < 100; ++trial) {
      const Workload w = testing::random_workload(rng, rng.draw_int(1, 6),
                                                  rng.draw_int(2, 8), rng.draw_int(2, 8));
      const Schedule schedule = balanced_pools_schedule(w);
      const Timeline timeline = simulate_fifo(schedule);
      CHECK(verify_timeline(timeline, schedule, w.cluster).empty());
    }
  }
}

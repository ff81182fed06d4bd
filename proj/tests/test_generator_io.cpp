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

#include <doctest.h>

#include "mklab/errors.hpp"
#include "mklab/generator.hpp"
#include "mklab/simulator.hpp"
#include "mklab/workload_io.hpp"
#include "test_support.hpp"

using namespace mklab;

TEST_CASE("generate_workload") {
  SUBCASE("a seed fully determines the workload") {
    GeneratorConfig config;
    config.seed = 42;
    config.n = 6;
    CHECK(generate_workload(config) == generate_workload(config));
    GeneratorConfig other = config;
    other.seed = 43;
    CHECK(generate_workload(config) != generate_workload(other));
  }
  SUBCASE("drawn values respect the configured ranges") {
    GeneratorConfig config;
    config.seed = 7;
    config.n = 40;
    config.cluster = {12, 9};
    config.duration_lo = Rational(1, 2);
    config.duration_hi = 8;
    const Workload w = validate_workload(generate_workload(config));
    REQUIRE(w.jobs.size() == 40);
    for (const JobSpec& job : w.jobs) {
      CHECK(job.map_demand <= 12);
      CHECK(job.reduce_demand <= 9);
      CHECK(job.map_duration >= Rational(1, 2));
      CHECK(job.map_duration <= 8);
      CHECK(boost::multiprecision::denominator(job.map_duration) <= 100);
      CHECK(boost::multiprecision::denominator(job.reduce_duration) <= 100);
    }
  }
  SUBCASE("n = 1 yields a single-job workload every policy agrees on") {
    GeneratorConfig config;
    config.seed = 5;
    config.n = 1;
    config.demand_lo = 30;  // whole cluster
    const Workload w = generate_workload(config);
    REQUIRE(w.jobs.size() == 1);
    const Rational expected = w.jobs[0].map_duration + w.jobs[0].reduce_duration;
    CHECK(uaas_schedule(w).predicted_makespan == expected);
    CHECK(simulate_fifo(mk_jr_schedule(w)).makespan == expected);
    CHECK(balanced_pools_schedule(w).predicted_makespan == expected);
  }
  SUBCASE("a degenerate duration range pins every duration") {
    GeneratorConfig config;
    config.seed = 1;
    config.n = 5;
    config.duration_lo = 5;
    config.duration_hi = 5;
    for (const JobSpec& job : generate_workload(config).jobs) {
      CHECK(job.map_duration == 5);
      CHECK(job.reduce_duration == 5);
    }
  }
  SUBCASE("demand_hi pins demands") {
    GeneratorConfig config;
    config.seed = 3;
    config.n = 8;
    config.cluster = {10, 10};
    config.demand_lo = 10;
    config.demand_hi = 10;
    for (const JobSpec& job : generate_workload(config).jobs) {
      CHECK(job.map_demand == 10);
      CHECK(job.reduce_demand == 10);
    }
  }
  SUBCASE("bad configurations are rejected") {
    GeneratorConfig config;
    config.n = 0;
    CHECK_THROWS_AS(generate_workload(config), ParameterError);
    config.n = 1;
    config.duration_lo = 9;
    config.duration_hi = 3;
    CHECK_THROWS_AS(generate_workload(config), ParameterError);
    config.duration_lo = 1;
    config.duration_hi = 20;
    config.demand_lo = 50;  // above a 30x30 cluster
    CHECK_THROWS_AS(generate_workload(config), ParameterError);
  }
}

TEST_CASE("workload files") {
  SUBCASE("the bundled fixtures load and validate") {
    const Workload table1 =
        validate_workload(load_workload_file(testing::fixture_path("table1.workload")));
    CHECK(table1 == testing::table1_workload());
    const Workload two5 =
        validate_workload(load_workload_file(testing::fixture_path("twojob5.workload")));
    CHECK(two5 == testing::two_job_workload());
    const Workload two4 =
        validate_workload(load_workload_file(testing::fixture_path("twojob4.workload")));
    CHECK(two4.cluster == ClusterConfig{8, 8});
    const Workload worst =
        validate_workload(load_workload_file(testing::fixture_path("worstcase-c0.workload")));
    CHECK(worst.jobs[0].reduce_duration == 100);
  }
  SUBCASE("format/parse round-trip") {
    testing::Rng rng(51);
    for (int trial = 0; trial < 40; ++trial) {
      Workload w = testing::random_workload(rng, rng.draw_int(1, 6), 8, 8);
      if (trial % 2 == 0) {
        w.jobs[0].map_tasks =
            std::vector<Rational>(4, w.jobs[0].map_duration * w.jobs[0].map_demand / 4);
        w.jobs[0].reduce_tasks = std::vector<Rational>{
            w.jobs[0].reduce_duration * w.jobs[0].reduce_demand};
      }
      CHECK(parse_workload_text(format_workload_text(w)) == w);
    }
  }
  SUBCASE("rational strings and integers both parse") {
    const std::string text = R"({
      "cluster": {"map_slots": 4, "reduce_slots": 4},
      "jobs": [{"id": "a", "map_demand": 2, "reduce_demand": 2,
                "map_duration": "8/3", "reduce_duration": "18.8"}]
    })";
    const Workload w = parse_workload_text(text);
    CHECK(w.jobs[0].map_duration == Rational(8, 3));
    CHECK(w.jobs[0].reduce_duration == Rational(94, 5));
  }
  SUBCASE("structural problems are parse errors") {
    CHECK_THROWS_AS(parse_workload_text("not json"), ParseError);
    CHECK_THROWS_AS(parse_workload_text("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_workload_text(R"({"jobs": []})"), ParseError);
    // missing duration field
    CHECK_THROWS_AS(parse_workload_text(R"({
      "cluster": {"map_slots": 4, "reduce_slots": 4},
      "jobs": [{"id": "a", "map_demand": 2, "reduce_demand": 2, "map_duration": 1}]
    })"),
                    ParseError);
    // non-integer JSON number
    CHECK_THROWS_AS(parse_workload_text(R"({
      "cluster": {"map_slots": 4, "reduce_slots": 4},
      "jobs": [{"id": "a", "map_demand": 2, "reduce_demand": 2,
                "map_duration": 1.5, "reduce_duration": 1}]
    })"),
                    ParseError);
    // typo'd key
    CHECK_THROWS_AS(parse_workload_text(R"({
      "cluster": {"map_slots": 4, "reduce_slots": 4},
      "jobs": [{"id": "a", "map_demand": 2, "reduce_demand": 2,
                "map_duratoin": 1, "reduce_duration": 1}]
    })"),
                    ParseError);
  }
  SUBCASE("missing files are io errors") {
    CHECK_THROWS_AS(load_workload_file("/nonexistent/nope.workload"), IoError);
  }
}

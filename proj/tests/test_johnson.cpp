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

#include "mklab/johnson.hpp"

#include <algorithm>
#include <doctest.h>

#include "mklab/analysis.hpp"
#include "mklab/errors.hpp"
#include "test_support.hpp"

using namespace mklab;

namespace {

// The five-job example rescaled to the whole 30x30 cluster.
std::vector<JohnsonJob> rescaled_five_jobs() {
  return {{"J1", 4, 5},
          {"J2", 1, 4},
          {"J3", 20, Rational(8, 3)},
          {"J4", 4, 20},
          {"J5", 2, 3}};
}

std::vector<JohnsonJob> random_jobs(mklab::testing::Rng& rng, int n) {
  std::vector<JohnsonJob> jobs;
  for (int i = 0; i < n; ++i) {
    jobs.push_back(
        {"J" + std::to_string(i + 1), rng.draw_rational(0, 25), rng.draw_rational(0, 25)});
  }
  return jobs;
}

}  // namespace

TEST_CASE("johnson_order on the reference instances") {
  SUBCASE("five-job example") {
    const OrderedSequence sequence = johnson_order(rescaled_five_jobs());
    CHECK(sequence.job_ids ==
          std::vector<std::string>{"J2", "J5", "J1", "J4", "J3"});
  }
  SUBCASE("two-job example rescaled to ten slots per stage") {
    const std::vector<JohnsonJob> jobs = {{"J1", 9, 1}, {"J2", Rational(44, 5), Rational(3, 2)}};
    CHECK(johnson_order(jobs).job_ids == std::vector<std::string>{"J2", "J1"});
  }
  SUBCASE("single job") {
    const std::vector<JohnsonJob> jobs = {{"only", 3, 7}};
    CHECK(johnson_order(jobs).job_ids == std::vector<std::string>{"only"});
  }
  SUBCASE("empty input gives an empty sequence") {
    CHECK(johnson_order({}).empty());
  }
}

TEST_CASE("johnson_order tie handling") {
  SUBCASE("a job with map == reduce is map type") {
    // A(5,5) sorts among map types by key 5, ahead of the reduce-type C.
    const std::vector<JohnsonJob> jobs = {{"A", 5, 5}, {"B", 3, 10}, {"C", 10, 3}};
    CHECK(johnson_order(jobs).job_ids == std::vector<std::string>{"B", "A", "C"});
  }
  SUBCASE("equal sort keys keep the earlier-submitted job first") {
    const std::vector<JohnsonJob> map_tie = {{"X", 4, 20}, {"Y", 4, 9}};
    CHECK(johnson_order(map_tie).job_ids == std::vector<std::string>{"X", "Y"});
    const std::vector<JohnsonJob> reduce_tie = {{"X", 9, 2}, {"Y", 5, 2}};
    CHECK(johnson_order(reduce_tie).job_ids == std::vector<std::string>{"X", "Y"});
  }
  SUBCASE("zero map duration sorts to the very front") {
    const std::vector<JohnsonJob> jobs = {{"A", 1, 2}, {"B", 0, 5}};
    CHECK(johnson_order(jobs).job_ids == std::vector<std::string>{"B", "A"});
  }
  SUBCASE("negative durations are rejected") {
    const std::vector<JohnsonJob> jobs = {{"A", -1, 2}};
    CHECK_THROWS_AS(johnson_order(jobs), ParameterError);
  }
}

TEST_CASE("closed_form_makespan on the reference instances") {
  SUBCASE("five-job example: 35 and two thirds, with a leading gap of 1") {
    const MakespanBreakdown breakdown =
        closed_form_makespan(johnson_order(rescaled_five_jobs()));
    CHECK(breakdown.makespan == Rational(107, 3));
    CHECK(breakdown.idle_gap == 1);
    CHECK(breakdown.critical_u == 0);
    REQUIRE(breakdown.prefix_terms.size() == 5);
    CHECK(breakdown.prefix_terms[0] == 1);
    CHECK(breakdown.prefix_terms[1] == -1);
    CHECK(breakdown.prefix_terms[2] == 0);
    CHECK(breakdown.prefix_terms[3] == -1);
    CHECK(breakdown.prefix_terms[4] == -1);
  }
  SUBCASE("two-job example: 18.8") {
    OrderedSequence sequence;
    sequence.job_ids = {"J2", "J1"};
    sequence.durations = {{Rational(44, 5), Rational(3, 2)}, {9, 1}};
    CHECK(closed_form_makespan(sequence).makespan == Rational(94, 5));
  }
  SUBCASE("single job is map plus reduce") {
    OrderedSequence sequence;
    sequence.job_ids = {"J"};
    sequence.durations = {{Rational(7, 2), Rational(5, 3)}};
    CHECK(closed_form_makespan(sequence).makespan == Rational(7, 2) + Rational(5, 3));
  }
  SUBCASE("empty sequence has makespan 0") {
    CHECK(closed_form_makespan(OrderedSequence{}).makespan == 0);
  }
}

TEST_CASE("pipeline completion times") {
  SUBCASE("five-job example") {
    const std::vector<Rational> completions =
        pipeline_completion_times(johnson_order(rescaled_five_jobs()));
    CHECK(completions ==
          std::vector<Rational>{5, 8, 13, 33, Rational(107, 3)});
  }
  SUBCASE("two-job example") {
    OrderedSequence sequence;
    sequence.job_ids = {"J2", "J1"};
    sequence.durations = {{Rational(44, 5), Rational(3, 2)}, {9, 1}};
    CHECK(pipeline_completion_times(sequence) ==
          std::vector<Rational>{Rational(103, 10), Rational(94, 5)});
  }
  SUBCASE("single job") {
    OrderedSequence sequence;
    sequence.job_ids = {"J"};
    sequence.durations = {{2, 3}};
    CHECK(pipeline_completion_times(sequence) == std::vector<Rational>{5});
  }
}

TEST_CASE("closed form and pipeline recurrence agree on random sequences") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto jobs = random_jobs(rng, rng.draw_int(0, 10));
    OrderedSequence sequence;
    for (const JohnsonJob& j : jobs) {
      sequence.job_ids.push_back(j.id);
      sequence.durations.push_back({j.map_duration, j.reduce_duration});
    }
    const auto completions = pipeline_completion_times(sequence);
    const Rational closed = closed_form_makespan(sequence).makespan;
    if (completions.empty()) {
      CHECK(closed == 0);
    } else {
      CHECK(completions.back() == closed);
    }
  }
}

TEST_CASE("johnson_order output is a permutation of its input") {
  testing::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto jobs = random_jobs(rng, rng.draw_int(0, 12));
    const OrderedSequence sequence = johnson_order(jobs);
    REQUIRE(sequence.size() == jobs.size());
    std::vector<std::string> expected;
    for (const JohnsonJob& j : jobs) expected.push_back(j.id);
    std::vector<std::string> actual = sequence.job_ids;
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    CHECK(expected == actual);
  }
}

TEST_CASE("johnson_order is optimal against exhaustive search") {
  testing::Rng rng(13);
  for (int trial = 0; trial < 120; ++trial) {
    const auto jobs = random_jobs(rng, rng.draw_int(1, 7));
    const Rational johnson = closed_form_makespan(johnson_order(jobs)).makespan;
    const Rational optimal = brute_force_best_order(jobs).makespan;
    CHECK(johnson == optimal);
  }
}

TEST_CASE("uniform duration scaling keeps the order and scales the makespan") {
  testing::Rng rng(14);
  const std::vector<Rational> factors = {Rational(1, 2), 2, 3, Rational(7, 5)};
  for (int trial = 0; trial < 100; ++trial) {
    const auto jobs = random_jobs(rng, rng.draw_int(1, 8));
    const OrderedSequence base = johnson_order(jobs);
    const Rational base_makespan = closed_form_makespan(base).makespan;
    for (const Rational& rho : factors) {
      std::vector<JohnsonJob> scaled = jobs;
      for (JohnsonJob& j : scaled) {
        j.map_duration *= rho;
        j.reduce_duration *= rho;
      }
      const OrderedSequence reordered = johnson_order(scaled);
      CHECK(reordered.job_ids == base.job_ids);
      CHECK(closed_form_makespan(reordered).makespan == base_makespan * rho);
    }
  }
}

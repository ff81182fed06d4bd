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
#include <numeric>

#include "mklab/errors.hpp"

namespace mklab {

OrderedSequence johnson_order(std::span<const JohnsonJob> jobs) {
  for (const JohnsonJob& job : jobs) {
    if (job.map_duration < 0 || job.reduce_duration < 0) {
      throw ParameterError("negative stage duration for job '" + job.id + "'");
    }
  }

  std::vector<std::size_t> index(jobs.size());
  std::iota(index.begin(), index.end(), std::size_t{0});

  // Map type (map <= reduce) first by ascending map duration, reduce type
  // after by descending reduce duration; input position breaks every tie.
  auto is_map_type = [&](std::size_t i) {
    return jobs[i].map_duration <= jobs[i].reduce_duration;
  };
  std::sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) {
    const bool map_a = is_map_type(a);
    const bool map_b = is_map_type(b);
    if (map_a != map_b) return map_a;
    if (map_a) {
      if (jobs[a].map_duration != jobs[b].map_duration) {
        return jobs[a].map_duration < jobs[b].map_duration;
      }
    } else {
      if (jobs[a].reduce_duration != jobs[b].reduce_duration) {
        return jobs[a].reduce_duration > jobs[b].reduce_duration;
      }
    }
    return a < b;
  });

  OrderedSequence sequence;
  sequence.job_ids.reserve(jobs.size());
  sequence.durations.reserve(jobs.size());
  for (std::size_t i : index) {
    sequence.job_ids.push_back(jobs[i].id);
    sequence.durations.push_back({jobs[i].map_duration, jobs[i].reduce_duration});
  }
  return sequence;
}

MakespanBreakdown closed_form_makespan(const OrderedSequence& sequence) {
  MakespanBreakdown breakdown;
  breakdown.makespan = 0;
  breakdown.idle_gap = 0;
  if (sequence.empty()) return breakdown;

  Rational prefix_map = 0;
  Rational prefix_reduce = 0;  // lags by one job: sum_{i<=u-1} reduce_i
  Rational total_reduce = 0;
  breakdown.prefix_terms.reserve(sequence.size());

  for (std::size_t u = 0; u < sequence.size(); ++u) {
    prefix_map += sequence.durations[u].map;
    const Rational k = prefix_map - prefix_reduce;
    breakdown.prefix_terms.push_back(k);
    if (u == 0 || k > breakdown.idle_gap) {
      breakdown.idle_gap = k;
      breakdown.critical_u = u;
    }
    prefix_reduce += sequence.durations[u].reduce;
    total_reduce += sequence.durations[u].reduce;
  }

  breakdown.makespan = total_reduce + breakdown.idle_gap;
  return breakdown;
}

std::vector<Rational> pipeline_completion_times(const OrderedSequence& sequence) {
  std::vector<Rational> completions;
  completions.reserve(sequence.size());
  Rational map_front = 0;  // when the map stage frees up: sum of maps so far
  Rational previous = 0;
  for (const StageDurations& d : sequence.durations) {
    map_front += d.map;
    previous = std::max(map_front, previous) + d.reduce;
    completions.push_back(previous);
  }
  return completions;
}

}  // namespace mklab

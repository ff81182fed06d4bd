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

#include "mklab/generator.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include "mklab/errors.hpp"

namespace mklab {

namespace {

// Unbiased draw in [0, bound); rejection sampling keeps results identical
// on every platform (distribution classes are implementation-defined).
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = (std::numeric_limits<std::uint64_t>::max() / bound) * bound;
  for (;;) {
    const std::uint64_t value = rng();
    if (value < limit) return value % bound;
  }
}

int draw_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(next_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

// Smallest integer >= value and largest integer <= value.
BigInt ceil_of(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

BigInt floor_of(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

// Uniform rational in [lo, hi] with denominator <= max_denominator: draw a
// denominator, then a numerator within range, retrying denominators whose
// admissible numerator range is empty.
Rational draw_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                       int max_denominator) {
  for (;;) {
    const int q = draw_int(rng, 1, max_denominator);
    const BigInt num_lo = ceil_of(lo * q);
    const BigInt num_hi = floor_of(hi * q);
    if (num_lo > num_hi) continue;
    const BigInt span = num_hi - num_lo + 1;
    if (span > BigInt(std::numeric_limits<std::uint64_t>::max())) {
      throw ParameterError("duration range too wide to sample");
    }
    const auto offset = next_below(rng, span.convert_to<std::uint64_t>());
    return Rational(num_lo + offset, BigInt(q));
  }
}

}  // namespace

Workload generate_workload(const GeneratorConfig& config) {
  if (config.n < 1) {
    throw ParameterError("generator needs n >= 1, got " + std::to_string(config.n));
  }
  if (config.cluster.map_slots < 1 || config.cluster.reduce_slots < 1) {
    throw ParameterError("generator cluster must have >= 1 slot per stage");
  }
  if (config.max_denominator < 1) {
    throw ParameterError("max_denominator must be >= 1");
  }
  if (config.duration_lo < 0 || config.duration_lo > config.duration_hi) {
    throw ParameterError("empty duration range [" + to_exact_string(config.duration_lo) +
                         ", " + to_exact_string(config.duration_hi) + "]");
  }
  // The range must admit at least one representable value.
  {
    bool representable = false;
    for (int q = 1; q <= config.max_denominator && !representable; ++q) {
      representable = ceil_of(config.duration_lo * q) <= floor_of(config.duration_hi * q);
    }
    if (!representable) {
      throw ParameterError("no rational with denominator <= " +
                           std::to_string(config.max_denominator) + " lies in [" +
                           to_exact_string(config.duration_lo) + ", " +
                           to_exact_string(config.duration_hi) + "]");
    }
  }

  const int map_demand_hi = config.demand_hi > 0
                                ? std::min(config.demand_hi, config.cluster.map_slots)
                                : config.cluster.map_slots;
  const int reduce_demand_hi = config.demand_hi > 0
                                   ? std::min(config.demand_hi, config.cluster.reduce_slots)
                                   : config.cluster.reduce_slots;
  if (config.demand_lo < 1 || config.demand_lo > map_demand_hi ||
      config.demand_lo > reduce_demand_hi) {
    throw ParameterError("empty demand range");
  }

  std::mt19937_64 rng(config.seed);
  Workload workload;
  workload.cluster = config.cluster;
  workload.jobs.reserve(config.n);
  for (int i = 0; i < config.n; ++i) {
    JobSpec job;
    job.id = "J" + std::to_string(i + 1);
    job.map_demand = draw_int(rng, config.demand_lo, map_demand_hi);
    job.reduce_demand = draw_int(rng, config.demand_lo, reduce_demand_hi);
    job.map_duration = draw_rational(rng, config.duration_lo, config.duration_hi,
                                     config.max_denominator);
    job.reduce_duration = draw_rational(rng, config.duration_lo, config.duration_hi,
                                        config.max_denominator);
    workload.jobs.push_back(std::move(job));
  }
  return workload;
}

}  // namespace mklab

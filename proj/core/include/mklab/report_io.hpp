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

#include <string>

#include "mklab/analysis.hpp"
#include "mklab/schedulers.hpp"

namespace mklab {

// JSON renderings of the report types. Every numeric field is emitted as
// {"exact": "p/q", "decimal": "..."}; the exact form is authoritative.

std::string schedule_to_json(const Schedule& schedule);
std::string comparison_report_to_json(const ComparisonReport& report);
std::string stability_report_to_json(const StabilityReport& report);
std::string ratio_sweep_to_json(const RatioSweepResult& result);
std::string oracle_result_to_json(const BruteForceResult& result, const Rational& uaas_makespan);

}  // namespace mklab

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

#include <filesystem>
#include <string>

#include "mklab/workload.hpp"

namespace mklab {

// Workload files are JSON documents:
//
//   {
//     "cluster": {"map_slots": 30, "reduce_slots": 30},
//     "jobs": [
//       {"id": "J1", "map_demand": 30, "reduce_demand": 30,
//        "map_duration": "4", "reduce_duration": "5",
//        "map_tasks": ["9", "9"], "reduce_tasks": ["10"]}
//     ]
//   }
//
// Durations and task times are exact: integers, or strings in "p/q" or
// decimal form. Non-integer JSON numbers are rejected (binary floats cannot
// round-trip exactly; quote them instead). Task arrays are optional.

// Structural parsing only; run validate_workload for semantic checks.
// Throws ParseError on malformed documents.
Workload parse_workload_text(const std::string& text);

// Throws IoError when the file cannot be read.
Workload load_workload_file(const std::filesystem::path& path);

// Canonical form: 2-space indent, keys sorted, durations as exact strings.
// parse(format(w)) == w.
std::string format_workload_text(const Workload& workload);

void save_workload_file(const Workload& workload, const std::filesystem::path& path);

}  // namespace mklab

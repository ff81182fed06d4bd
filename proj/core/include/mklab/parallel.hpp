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
#include <functional>

namespace mklab {

// Worker cap: MAKESPAN_LAB_THREADS when set (minimum 1), otherwise
// hardware_concurrency.
unsigned max_threads();

// Runs chunk indices [0, chunk_count) on up to max_threads() workers.
// Chunks must be independent; callers reduce their results serially in
// chunk order afterwards, so parallel and serial runs agree exactly.
// Exceptions from chunks are rethrown on the caller's thread.
void run_chunked(std::size_t chunk_count, const std::function<void(std::size_t)>& run_chunk);

}  // namespace mklab

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

#include <stdexcept>
#include <string>
#include <vector>

namespace mklab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input text (workload files, rational literals, flag values).
class ParseError : public Error {
 public:
  using Error::Error;
};

// One semantic problem found while validating a workload.
struct FieldIssue {
  std::string job_id;  // empty when the issue is not tied to a job
  std::string field;
  std::string message;

  bool operator==(const FieldIssue&) const = default;
};

// Carries every violation found, not just the first one.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<FieldIssue> issues);

  const std::vector<FieldIssue>& issues() const { return issues_; }

 private:
  std::vector<FieldIssue> issues_;
};

// A value outside an operation's domain (bad allocation, C0 <= 1,
// brute-force size limit, non-integral scaled slot counts, empty ranges).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A cluster too small for the requested pool configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Task-level times required but absent.
class DataError : public Error {
 public:
  using Error::Error;
};

// A schedule stage demands more slots than its pool holds.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A fixed pool assignment that misses or duplicates jobs.
class AssignmentError : public Error {
 public:
  using Error::Error;
};

}  // namespace mklab

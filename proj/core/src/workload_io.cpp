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

#include "mklab/workload_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "mklab/errors.hpp"

namespace mklab {

namespace {

using nlohmann::json;

Rational parse_number(const json& value, const std::string& context) {
  if (value.is_number_integer()) {
    return Rational(value.get<long long>());
  }
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(context + ": " + e.what());
    }
  }
  if (value.is_number()) {
    throw ParseError(context +
                     ": non-integer JSON numbers lose exactness; quote the value "
                     "(e.g. \"18.8\" or \"94/5\")");
  }
  throw ParseError(context + ": expected an integer or a rational string");
}

Rational number_field(const json& object, const std::string& context, const char* key) {
  if (!object.contains(key)) {
    throw ParseError(context + ": missing field '" + key + "'");
  }
  return parse_number(object.at(key), context + "." + key);
}

int int_field(const json& object, const std::string& context, const char* key) {
  if (!object.contains(key)) {
    throw ParseError(context + ": missing field '" + key + "'");
  }
  const json& value = object.at(key);
  if (!value.is_number_integer()) {
    throw ParseError(context + "." + key + ": expected an integer");
  }
  return value.get<int>();
}

std::vector<Rational> task_list(const json& array, const std::string& context) {
  if (!array.is_array()) {
    throw ParseError(context + ": expected an array of task times");
  }
  std::vector<Rational> tasks;
  tasks.reserve(array.size());
  std::size_t index = 0;
  for (const json& element : array) {
    tasks.push_back(parse_number(element, context + "[" + std::to_string(index) + "]"));
    ++index;
  }
  return tasks;
}

void reject_unknown_keys(const json& object, const std::string& context,
                         std::initializer_list<const char*> known) {
  for (const auto& [key, value] : object.items()) {
    bool recognized = false;
    for (const char* k : known) {
      if (key == k) {
        recognized = true;
        break;
      }
    }
    if (!recognized) {
      throw ParseError(context + ": unknown field '" + key + "'");
    }
  }
}

json rational_list_to_json(const std::vector<Rational>& values) {
  json array = json::array();
  for (const Rational& value : values) array.push_back(to_exact_string(value));
  return array;
}

}  // namespace

Workload parse_workload_text(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid workload document: ") + e.what());
  }
  if (!document.is_object()) {
    throw ParseError("workload document must be a JSON object");
  }
  reject_unknown_keys(document, "workload", {"cluster", "jobs"});

  if (!document.contains("cluster") || !document.at("cluster").is_object()) {
    throw ParseError("workload: missing 'cluster' object");
  }
  const json& cluster = document.at("cluster");
  reject_unknown_keys(cluster, "cluster", {"map_slots", "reduce_slots"});

  Workload workload;
  workload.cluster.map_slots = int_field(cluster, "cluster", "map_slots");
  workload.cluster.reduce_slots = int_field(cluster, "cluster", "reduce_slots");

  if (!document.contains("jobs") || !document.at("jobs").is_array()) {
    throw ParseError("workload: missing 'jobs' array");
  }
  std::size_t index = 0;
  for (const json& entry : document.at("jobs")) {
    const std::string context = "jobs[" + std::to_string(index) + "]";
    if (!entry.is_object()) {
      throw ParseError(context + ": expected a job object");
    }
    reject_unknown_keys(entry, context,
                        {"id", "map_demand", "reduce_demand", "map_duration",
                         "reduce_duration", "map_tasks", "reduce_tasks"});
    if (!entry.contains("id") || !entry.at("id").is_string()) {
      throw ParseError(context + ": missing string field 'id'");
    }

    JobSpec job;
    job.id = entry.at("id").get<std::string>();
    job.map_demand = int_field(entry, context, "map_demand");
    job.reduce_demand = int_field(entry, context, "reduce_demand");
    job.map_duration = number_field(entry, context, "map_duration");
    job.reduce_duration = number_field(entry, context, "reduce_duration");
    if (entry.contains("map_tasks")) {
      job.map_tasks = task_list(entry.at("map_tasks"), context + ".map_tasks");
    }
    if (entry.contains("reduce_tasks")) {
      job.reduce_tasks = task_list(entry.at("reduce_tasks"), context + ".reduce_tasks");
    }
    workload.jobs.push_back(std::move(job));
    ++index;
  }
  return workload;
}

Workload load_workload_file(const std::filesystem::path& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw IoError("cannot open workload file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  if (stream.bad()) {
    throw IoError("failed reading workload file '" + path.string() + "'");
  }
  return parse_workload_text(buffer.str());
}

std::string format_workload_text(const Workload& workload) {
  json document;
  document["cluster"] = {{"map_slots", workload.cluster.map_slots},
                         {"reduce_slots", workload.cluster.reduce_slots}};
  json jobs = json::array();
  for (const JobSpec& job : workload.jobs) {
    json entry;
    entry["id"] = job.id;
    entry["map_demand"] = job.map_demand;
    entry["reduce_demand"] = job.reduce_demand;
    entry["map_duration"] = to_exact_string(job.map_duration);
    entry["reduce_duration"] = to_exact_string(job.reduce_duration);
    if (job.map_tasks) entry["map_tasks"] = rational_list_to_json(*job.map_tasks);
    if (job.reduce_tasks) entry["reduce_tasks"] = rational_list_to_json(*job.reduce_tasks);
    jobs.push_back(std::move(entry));
  }
  document["jobs"] = std::move(jobs);
  return document.dump(2) + "\n";
}

void save_workload_file(const Workload& workload, const std::filesystem::path& path) {
  std::ofstream stream(path);
  if (!stream) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  stream << format_workload_text(workload);
  if (!stream) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

}  // namespace mklab

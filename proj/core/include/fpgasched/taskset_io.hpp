// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fpgasched/task_model.hpp"

namespace fpgasched {

struct TaskSet {
  FleetConfig config;
  std::vector<TaskSpec> tasks;
};

// Parses the JSON task-set document:
//
//   { "config": { "n_fpgas": 4, "time_slice_ms": 60, "reconfig_time_ms": 6 },
//     "tasks": [ { "name": "T1", "period_ms": 60, "init_interval_ms": 2,
//                  "data_size": 24,
//                  "variants": [ { "cu_count": 1, "throughput_per_ms": 0.5,
//                                  "power_mw": 5 }, ... ] }, ... ] }
//
// Tasks keep document order. Every error is an InputError whose message
// carries a field path such as "tasks[2].variants[1].throughput_per_ms".
TaskSet parse_taskset(std::string_view document);
TaskSet load_taskset(const std::filesystem::path& path);

// Inverse of parse_taskset; parse(serialize(x)) reproduces x exactly.
std::string serialize_taskset(const TaskSet& taskset);

}  // namespace fpgasched

// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include "fpgasched/task_model.hpp"

#include <cmath>
#include <sstream>

namespace fpgasched {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

std::string task_path(const TaskSpec& task) {
  return "task '" + task.name + "'";
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void validate_task(const TaskSpec& task) {
  if (task.name.empty()) fail("task", "name must be non-empty");
  const std::string where = task_path(task);
  if (!finite_positive(task.period_ms)) fail(where + " period_ms", "must be > 0");
  if (!std::isfinite(task.init_interval_ms) || task.init_interval_ms < 0.0) {
    fail(where + " init_interval_ms", "must be >= 0");
  }
  if (!finite_positive(task.data_size)) fail(where + " data_size", "must be > 0");
  if (task.variants.empty()) fail(where + " variants", "must be non-empty");

  for (std::size_t j = 0; j < task.variants.size(); ++j) {
    const VariantSpec& v = task.variants[j];
    const std::string vwhere = where + " variants[" + std::to_string(j) + "]";
    if (v.cu_count < 1) fail(vwhere + ".cu_count", "must be >= 1");
    if (!finite_positive(v.throughput)) fail(vwhere + ".throughput_per_ms", "must be > 0");
    if (!finite_positive(v.power_mw)) fail(vwhere + ".power_mw", "must be > 0");
    if (j > 0 && !(v.throughput > task.variants[j - 1].throughput)) {
      fail(vwhere + ".throughput_per_ms", "throughputs must strictly increase with variant index");
    }
  }
}

void validate_config(const FleetConfig& config) {
  if (config.n_fpgas < 1) fail("config.n_fpgas", "must be >= 1");
  if (!finite_positive(config.time_slice_ms)) fail("config.time_slice_ms", "must be > 0");
  if (!std::isfinite(config.reconfig_time_ms) || config.reconfig_time_ms < 0.0) {
    fail("config.reconfig_time_ms", "must be >= 0");
  }
  if (!(config.reconfig_time_ms < config.time_slice_ms)) {
    fail("config.reconfig_time_ms", "must be smaller than time_slice_ms");
  }
}

void validate_taskset(std::span<const TaskSpec> tasks, const FleetConfig& config) {
  validate_config(config);
  if (tasks.empty()) fail("tasks", "task list must be non-empty");
  for (const TaskSpec& t : tasks) validate_task(t);
}

double execution_time(const TaskSpec& task, std::size_t variant_index) {
  if (variant_index >= task.variants.size()) {
    std::ostringstream msg;
    msg << "variant index " << variant_index << " out of range for task '" << task.name
        << "' with " << task.variants.size() << " variants";
    throw DomainError(msg.str());
  }
  return task.data_size / task.variants[variant_index].throughput;
}

double share(const TaskSpec& task, std::size_t variant_index, double time_slice_ms) {
  // Multiply before dividing by the period so integral shares stay exact.
  return execution_time(task, variant_index) * time_slice_ms / task.period_ms;
}

double task_weight(const TaskSpec& task, std::size_t variant_index) {
  return execution_time(task, variant_index) / task.period_ms;
}

VariantSelection make_selection(std::span<const TaskSpec> tasks,
                                std::vector<std::size_t> choice, double time_slice_ms) {
  if (choice.size() != tasks.size()) {
    throw DomainError("selection has " + std::to_string(choice.size()) + " indices for " +
                      std::to_string(tasks.size()) + " tasks");
  }
  VariantSelection sel;
  sel.shares.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const double s = share(tasks[i], choice[i], time_slice_ms);
    sel.shares.push_back(s);
    sel.total_share += s;
    sel.total_power += tasks[i].variants[choice[i]].power_mw;
  }
  sel.choice = std::move(choice);
  return sel;
}

std::vector<std::vector<double>> share_table(std::span<const TaskSpec> tasks,
                                             double time_slice_ms) {
  std::vector<std::vector<double>> table;
  table.reserve(tasks.size());
  for (const TaskSpec& t : tasks) {
    std::vector<double> row;
    row.reserve(t.variants.size());
    for (std::size_t j = 0; j < t.variants.size(); ++j) row.push_back(share(t, j, time_slice_ms));
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace fpgasched

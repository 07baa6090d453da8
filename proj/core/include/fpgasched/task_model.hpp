// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpgasched {

// All durations are milliseconds. Data sizes and throughputs share one opaque
// data unit (GB, KB, ...); nothing in the library converts between units.

// Comparisons on continuous time values treat differences below this as equal.
inline constexpr double kTimeEpsilon = 1e-9;

// Error taxonomy. The CLI maps each class to a distinct exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input document / task description.
class InputError : public Error {
 public:
  using Error::Error;
};

// A value outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A size limit (combination cap, oracle bounds) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An operation was called without its precondition holding.
class ContractError : public Error {
 public:
  using Error::Error;
};

struct VariantSpec {
  int cu_count = 1;
  double throughput = 0.0;  // data units per ms
  double power_mw = 0.0;
};

struct TaskSpec {
  std::string name;
  double period_ms = 0.0;
  double init_interval_ms = 0.0;
  double data_size = 0.0;
  std::vector<VariantSpec> variants;

  std::size_t variant_count() const { return variants.size(); }
};

struct FleetConfig {
  int n_fpgas = 1;
  double time_slice_ms = 0.0;
  double reconfig_time_ms = 0.0;

  double capacity_ms() const { return n_fpgas * time_slice_ms; }
};

// One variant index per task, with the derived shares and power of that
// combination. Build through make_selection() so the derived fields agree.
struct VariantSelection {
  std::vector<std::size_t> choice;
  std::vector<double> shares;
  double total_share = 0.0;
  double total_power = 0.0;

  bool operator==(const VariantSelection&) const = default;
};

// Throws InputError naming the offending task and field.
void validate_task(const TaskSpec& task);
void validate_config(const FleetConfig& config);
void validate_taskset(std::span<const TaskSpec> tasks, const FleetConfig& config);

// td / th for the given variant. Throws DomainError on a bad index.
double execution_time(const TaskSpec& task, std::size_t variant_index);

// (e / p) * t_slr. The share includes the task's first initialization interval.
double share(const TaskSpec& task, std::size_t variant_index, double time_slice_ms);

// e / p for the given variant.
double task_weight(const TaskSpec& task, std::size_t variant_index);

// Throws DomainError when choice does not index every task.
VariantSelection make_selection(std::span<const TaskSpec> tasks,
                                std::vector<std::size_t> choice,
                                double time_slice_ms);

// Per-task table of shares, shares[i][j] == share(tasks[i], j, t_slr).
std::vector<std::vector<double>> share_table(std::span<const TaskSpec> tasks,
                                             double time_slice_ms);

}  // namespace fpgasched

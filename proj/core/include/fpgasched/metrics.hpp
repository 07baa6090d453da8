// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpgasched/enumeration.hpp"
#include "fpgasched/placement.hpp"
#include "fpgasched/task_model.hpp"

namespace fpgasched {

// 100 * rejected / total. DomainError when total == 0 or rejected > total.
double task_rejection_ratio(std::uint64_t rejected, std::uint64_t total);

// 100 * sum of shares / (t_slr * n_f). Not clamped.
double system_workload(const VariantSelection& selection, const FleetConfig& config);

// Mean of e_i / p_i over the selected variants.
double avg_task_weight(std::span<const TaskSpec> tasks, const VariantSelection& selection);

// Upper bound on context switches per slice:
// (n_f * t_slr - sum of shares) / (n_f * t_cfg). DomainError when t_cfg == 0.
double nc_max(std::span<const TaskSpec> tasks, const VariantSelection& selection,
              const FleetConfig& config);

// sum of shares <= t_slr * n_f, ignoring reconfiguration. Reported only;
// enumeration filters on check_workability.
bool satisfies_primary_workability(const VariantSelection& selection,
                                   const FleetConfig& config);

// Idle time of a schedule: capacity minus every CONFIG/INIT/EXEC duration.
double total_null_ms(const Schedule& schedule, const FleetConfig& config);

struct MetricsReport {
  std::uint64_t total_combinations = 0;
  std::uint64_t rejected_eq7 = 0;
  std::uint64_t rejected_placement = 0;
  double trr_percent = 0.0;
  double system_workload_percent = 0.0;
  double avg_task_weight = 0.0;
  std::optional<double> nc_max;  // unbounded when t_cfg == 0
  double total_power_mw = 0.0;
  double total_null_ms = 0.0;
  bool primary_workability = false;
};

// Metrics for `schedule`, with rejection counts taken from the enumeration
// and the placement survey of its feasible rows.
MetricsReport make_report(std::span<const TaskSpec> tasks, const FleetConfig& config,
                          const EnumerationResult& enumeration,
                          const PlacementSurvey& survey, const Schedule& schedule);

struct SweepRow {
  int n_fpgas = 0;
  double reconfig_time_ms = 0.0;
  std::uint64_t total = 0;
  std::uint64_t rejected_eq7 = 0;
  std::uint64_t rejected_placement = 0;
  double trr_percent = 0.0;
  // Maxima over accepted (workable and placeable) selections; 0 when none.
  double max_workload_percent = 0.0;
  double max_avg_weight = 0.0;
  double trr_eq7_percent = 0.0;
};

struct SweepOptions {
  std::uint64_t limit = kDefaultCombinationLimit;
  WorkabilityBudget budget = kDefaultWorkabilityBudget;
};

// One row per (n_f, t_cfg) pair, n_f major. `base` supplies t_slr.
std::vector<SweepRow> sweep(std::span<const TaskSpec> tasks, const FleetConfig& base,
                            std::span<const int> fpga_counts,
                            std::span<const double> reconfig_times,
                            const SweepOptions& options = {});

// Delimited table with a header line.
std::string format_sweep_table(std::span<const SweepRow> rows, char delimiter = ',');

}  // namespace fpgasched

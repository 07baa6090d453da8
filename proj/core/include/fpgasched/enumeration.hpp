// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fpgasched/task_model.hpp"

namespace fpgasched {

inline constexpr std::uint64_t kDefaultCombinationLimit = 10'000'000;

// How many full reconfigurations the workability budget reserves out of the
// fleet capacity n_f * t_slr.
enum class WorkabilityBudget {
  // n_t * t_cfg: one load per task, the best case for any placement.
  kTaskConfigs,
  // (n_t + 1) * t_cfg: one extra load for a task resumed on a second FPGA.
  kTaskConfigsPlusOne,
};

inline constexpr WorkabilityBudget kDefaultWorkabilityBudget =
    WorkabilityBudget::kTaskConfigsPlusOne;

double capacity_budget(const FleetConfig& config, std::size_t n_tasks,
                       WorkabilityBudget rule = kDefaultWorkabilityBudget);

// total_share <= capacity_budget(...), inclusive.
bool check_workability(const VariantSelection& selection, const FleetConfig& config,
                       std::size_t n_tasks,
                       WorkabilityBudget rule = kDefaultWorkabilityBudget);

struct EnumerationOptions {
  std::uint64_t limit = kDefaultCombinationLimit;
  WorkabilityBudget budget = kDefaultWorkabilityBudget;
  // Called for every combination that fails the workability test, in
  // enumeration order. Rows are never stored.
  std::function<void(const VariantSelection&)> on_infeasible;
};

struct EnumerationResult {
  std::uint64_t total_combinations = 0;
  std::vector<VariantSelection> feasible;  // lexicographic variant order
  std::uint64_t infeasible_count = 0;
  double capacity_budget = 0.0;
};

// Product of variant counts, saturating at UINT64_MAX.
std::uint64_t combination_count(std::span<const TaskSpec> tasks);

// Visits every variant combination in lexicographic order (last task varies
// fastest) and partitions it by the workability test. Throws CapacityError
// when the combination count exceeds options.limit.
EnumerationResult enumerate(std::span<const TaskSpec> tasks, const FleetConfig& config,
                            const EnumerationOptions& options = {});

}  // namespace fpgasched

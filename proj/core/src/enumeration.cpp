// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include "fpgasched/enumeration.hpp"

#include <limits>
#include <string>

namespace fpgasched {

double capacity_budget(const FleetConfig& config, std::size_t n_tasks, WorkabilityBudget rule) {
  const double loads = rule == WorkabilityBudget::kTaskConfigsPlusOne
                           ? static_cast<double>(n_tasks + 1)
                           : static_cast<double>(n_tasks);
  return config.capacity_ms() - loads * config.reconfig_time_ms;
}

bool check_workability(const VariantSelection& selection, const FleetConfig& config,
                       std::size_t n_tasks, WorkabilityBudget rule) {
  return selection.total_share <= capacity_budget(config, n_tasks, rule) + kTimeEpsilon;
}

std::uint64_t combination_count(std::span<const TaskSpec> tasks) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  for (const TaskSpec& t : tasks) {
    const std::uint64_t nv = t.variants.size();
    if (nv == 0) return 0;
    if (n > kMax / nv) return kMax;
    n *= nv;
  }
  return n;
}

EnumerationResult enumerate(std::span<const TaskSpec> tasks, const FleetConfig& config,
                            const EnumerationOptions& options) {
  if (tasks.empty()) throw DomainError("cannot enumerate an empty task list");
  const std::uint64_t total = combination_count(tasks);
  if (total == 0) throw DomainError("every task needs at least one variant");
  if (total > options.limit) {
    throw CapacityError("variant combination count " +
                        (total == std::numeric_limits<std::uint64_t>::max()
                             ? std::string("(overflow)")
                             : std::to_string(total)) +
                        " exceeds the enumeration limit " + std::to_string(options.limit));
  }

  EnumerationResult result;
  result.total_combinations = total;
  result.capacity_budget = capacity_budget(config, tasks.size(), options.budget);

  const auto shares = share_table(tasks, config.time_slice_ms);
  const std::size_t n = tasks.size();
  std::vector<std::size_t> idx(n, 0);

  // Odometer over variant indices; the last task turns fastest.
  for (std::uint64_t visited = 0; visited < total; ++visited) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += shares[i][idx[i]];

    if (sum <= result.capacity_budget + kTimeEpsilon) {
      result.feasible.push_back(make_selection(tasks, idx, config.time_slice_ms));
    } else {
      ++result.infeasible_count;
      if (options.on_infeasible) options.on_infeasible(make_selection(tasks, idx, config.time_slice_ms));
    }

    for (std::size_t pos = n; pos-- > 0;) {
      if (++idx[pos] < tasks[pos].variants.size()) break;
      idx[pos] = 0;
    }
  }
  return result;
}

}  // namespace fpgasched

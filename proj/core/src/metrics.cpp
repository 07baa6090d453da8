// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include "fpgasched/metrics.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace fpgasched {

double task_rejection_ratio(std::uint64_t rejected, std::uint64_t total) {
  if (total == 0) throw DomainError("task rejection ratio needs at least one combination");
  if (rejected > total) throw DomainError("rejected count exceeds total combinations");
  return 100.0 * static_cast<double>(rejected) / static_cast<double>(total);
}

double system_workload(const VariantSelection& selection, const FleetConfig& config) {
  return 100.0 * selection.total_share / config.capacity_ms();
}

double avg_task_weight(std::span<const TaskSpec> tasks, const VariantSelection& selection) {
  if (tasks.empty()) throw DomainError("average task weight of an empty task set");
  if (selection.choice.size() != tasks.size()) {
    throw DomainError("selection does not cover every task");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < tasks.size(); ++i) sum += task_weight(tasks[i], selection.choice[i]);
  return sum / static_cast<double>(tasks.size());
}

double nc_max(std::span<const TaskSpec> /*tasks*/, const VariantSelection& selection,
              const FleetConfig& config) {
  if (!(config.reconfig_time_ms > 0.0)) {
    throw DomainError("context-switch bound is unbounded when reconfig_time_ms == 0");
  }
  return (config.capacity_ms() - selection.total_share) /
         (config.n_fpgas * config.reconfig_time_ms);
}

bool satisfies_primary_workability(const VariantSelection& selection,
                                   const FleetConfig& config) {
  return selection.total_share <= config.capacity_ms() + kTimeEpsilon;
}

double total_null_ms(const Schedule& schedule, const FleetConfig& config) {
  double busy = 0.0;
  for (const FpgaTimeline& tl : schedule.timelines) {
    for (const Segment& s : tl.segments) {
      if (s.kind != SegmentKind::kNull) busy += s.duration_ms();
    }
  }
  return config.capacity_ms() - busy;
}

MetricsReport make_report(std::span<const TaskSpec> tasks, const FleetConfig& config,
                          const EnumerationResult& enumeration,
                          const PlacementSurvey& survey, const Schedule& schedule) {
  MetricsReport r;
  r.total_combinations = enumeration.total_combinations;
  r.rejected_eq7 = enumeration.infeasible_count;
  r.rejected_placement = survey.rejected;
  r.trr_percent = task_rejection_ratio(r.rejected_eq7 + r.rejected_placement, r.total_combinations);
  r.system_workload_percent = system_workload(schedule.selection, config);
  r.avg_task_weight = avg_task_weight(tasks, schedule.selection);
  if (config.reconfig_time_ms > 0.0) r.nc_max = nc_max(tasks, schedule.selection, config);
  r.total_power_mw = schedule.selection.total_power;
  r.total_null_ms = total_null_ms(schedule, config);
  r.primary_workability = satisfies_primary_workability(schedule.selection, config);
  return r;
}

std::vector<SweepRow> sweep(std::span<const TaskSpec> tasks, const FleetConfig& base,
                            std::span<const int> fpga_counts,
                            std::span<const double> reconfig_times,
                            const SweepOptions& options) {
  if (fpga_counts.empty() || reconfig_times.empty()) {
    throw DomainError("sweep ranges must be non-empty");
  }
  std::vector<SweepRow> rows;
  for (int nf : fpga_counts) {
    for (double cfg : reconfig_times) {
      FleetConfig config{nf, base.time_slice_ms, cfg};
      validate_config(config);

      EnumerationOptions eopts;
      eopts.limit = options.limit;
      eopts.budget = options.budget;
      const EnumerationResult e = enumerate(tasks, config, eopts);

      SweepRow row;
      row.n_fpgas = nf;
      row.reconfig_time_ms = cfg;
      row.total = e.total_combinations;
      row.rejected_eq7 = e.infeasible_count;
      for (const VariantSelection& s : e.feasible) {
        if (!is_placeable(s, tasks, config)) {
          ++row.rejected_placement;
          continue;
        }
        row.max_workload_percent = std::max(row.max_workload_percent, system_workload(s, config));
        row.max_avg_weight = std::max(row.max_avg_weight, avg_task_weight(tasks, s));
      }
      row.trr_percent = task_rejection_ratio(row.rejected_eq7 + row.rejected_placement, row.total);
      row.trr_eq7_percent = task_rejection_ratio(row.rejected_eq7, row.total);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string format_sweep_table(std::span<const SweepRow> rows, char delimiter) {
  std::ostringstream out;
  const char d = delimiter;
  out << "n_f" << d << "t_cfg" << d << "total" << d << "rejected_eq7" << d
      << "rejected_placement" << d << "trr_percent" << d << "max_workload_percent" << d
      << "max_avg_weight" << d << "trr_eq7_percent\n";
  for (const SweepRow& r : rows) {
    out << r.n_fpgas << d << r.reconfig_time_ms << d << r.total << d << r.rejected_eq7 << d
        << r.rejected_placement << d << std::fixed << std::setprecision(4) << r.trr_percent << d
        << r.max_workload_percent << d << std::setprecision(6) << r.max_avg_weight << d
        << std::setprecision(4) << r.trr_eq7_percent << '\n'
        << std::defaultfloat;
  }
  return out.str();
}

}  // namespace fpgasched

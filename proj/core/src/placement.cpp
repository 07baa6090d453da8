// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include "fpgasched/placement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fpgasched {

std::string_view to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::kConfig: return "CONFIG";
    case SegmentKind::kInit: return "INIT";
    case SegmentKind::kExec: return "EXEC";
    case SegmentKind::kNull: return "NULL";
  }
  return "NULL";
}

SegmentKind segment_kind_from_string(std::string_view name) {
  if (name == "CONFIG") return SegmentKind::kConfig;
  if (name == "INIT") return SegmentKind::kInit;
  if (name == "EXEC") return SegmentKind::kExec;
  if (name == "NULL") return SegmentKind::kNull;
  throw InputError("unknown segment kind '" + std::string(name) + "'");
}

namespace {

// Appends segments to `out` when non-null; the cursor-only callers pass null.
class SegmentWriter {
 public:
  explicit SegmentWriter(std::vector<Segment>* out) : out_(out) {}

  void emit(SegmentKind kind, std::optional<std::size_t> task, double length) {
    if (length <= kTimeEpsilon) return;
    if (out_ != nullptr) out_->push_back({kind, task, now_, now_ + length});
    now_ += length;
  }

  void close(double slice_end) {
    if (slice_end - now_ <= kTimeEpsilon) return;
    if (out_ != nullptr) out_->push_back({SegmentKind::kNull, std::nullopt, now_, slice_end});
    now_ = slice_end;
  }

 private:
  std::vector<Segment>* out_;
  double now_ = 0.0;
};

PackCursor pack_impl(const VariantSelection& selection, std::span<const TaskSpec> tasks,
                     const FleetConfig& config, PackCursor cursor, std::vector<Segment>* out) {
  const double cfg = config.reconfig_time_ms;
  double capacity = config.time_slice_ms;
  SegmentWriter writer(out);

  std::size_t k = cursor.next_task;
  double done = cursor.done_share;
  while (k < tasks.size()) {
    const double ii = tasks[k].init_interval_ms;
    // Not enough room to load the task and get through its pipeline fill.
    if (!(capacity > cfg + ii + kTimeEpsilon)) break;

    // Shares already include the first II; a resumed task pays it again.
    const double resume_penalty = done > 0.0 ? ii : 0.0;
    const double remaining = selection.shares[k] - done;
    const double room = capacity - cfg - resume_penalty;

    writer.emit(SegmentKind::kConfig, k, cfg);
    writer.emit(SegmentKind::kInit, k, resume_penalty);
    if (remaining > room + kTimeEpsilon) {
      writer.emit(SegmentKind::kExec, k, room);
      return {k, done + room};
    }
    writer.emit(SegmentKind::kExec, k, remaining);
    capacity = std::max(0.0, capacity - cfg - resume_penalty - remaining);
    done = 0.0;
    ++k;
  }
  writer.close(config.time_slice_ms);
  return {k, done};
}

void check_selection(const VariantSelection& selection, std::span<const TaskSpec> tasks) {
  if (selection.shares.size() != tasks.size() || selection.choice.size() != tasks.size()) {
    throw DomainError("selection does not cover every task");
  }
}

std::vector<SplitDirective> collect_splits(const Schedule& schedule,
                                           std::span<const TaskSpec> tasks) {
  std::vector<std::vector<std::pair<std::size_t, double>>> runs(tasks.size());
  for (const FpgaTimeline& tl : schedule.timelines) {
    for (const Segment& s : tl.segments) {
      if (s.kind == SegmentKind::kExec && s.task_index) {
        runs[*s.task_index].emplace_back(tl.fpga_index, s.duration_ms());
      }
    }
  }
  std::vector<SplitDirective> splits;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    if (runs[k].size() < 2) continue;
    std::vector<double> weights;
    for (const auto& r : runs[k]) weights.push_back(r.second);
    const std::vector<double> amounts = split_data(tasks[k].data_size, weights);
    SplitDirective d{k, {}};
    double offset = 0.0;
    for (std::size_t p = 0; p < amounts.size(); ++p) {
      d.parts.push_back({runs[k][p].first, offset, amounts[p]});
      offset += amounts[p];
    }
    splits.push_back(std::move(d));
  }
  return splits;
}

}  // namespace

PackResult pack_one_fpga(const VariantSelection& selection, std::span<const TaskSpec> tasks,
                         const FleetConfig& config, PackCursor cursor) {
  check_selection(selection, tasks);
  PackResult result;
  result.cursor = pack_impl(selection, tasks, config, cursor, &result.segments);
  return result;
}

Schedule pack_fleet(const VariantSelection& selection, std::span<const TaskSpec> tasks,
                    const FleetConfig& config) {
  check_selection(selection, tasks);
  Schedule schedule;
  schedule.selection = selection;
  PackCursor cursor;
  for (int j = 0; j < config.n_fpgas; ++j) {
    FpgaTimeline tl{static_cast<std::size_t>(j), {}};
    cursor = pack_impl(selection, tasks, config, cursor, &tl.segments);
    schedule.timelines.push_back(std::move(tl));
  }
  schedule.feasible = cursor.next_task == tasks.size();
  if (schedule.feasible) schedule.splits = collect_splits(schedule, tasks);
  return schedule;
}

bool is_placeable(const VariantSelection& selection, std::span<const TaskSpec> tasks,
                  const FleetConfig& config) {
  check_selection(selection, tasks);
  PackCursor cursor;
  for (int j = 0; j < config.n_fpgas && cursor.next_task < tasks.size(); ++j) {
    cursor = pack_impl(selection, tasks, config, cursor, nullptr);
  }
  return cursor.next_task == tasks.size();
}

std::optional<Schedule> try_place(const VariantSelection& selection,
                                  std::span<const TaskSpec> tasks, const FleetConfig& config) {
  Schedule s = pack_fleet(selection, tasks, config);
  if (!s.feasible) return std::nullopt;
  return s;
}

Schedule build_schedule(const VariantSelection& selection, std::span<const TaskSpec> tasks,
                        const FleetConfig& config) {
  Schedule s = pack_fleet(selection, tasks, config);
  if (!s.feasible) {
    throw ContractError("build_schedule called on a selection that does not fit the fleet");
  }
  return s;
}

bool lower_power_first(const VariantSelection& a, const VariantSelection& b) {
  // Compare power on a micro-milliwatt grid so summation noise cannot reorder
  // combinations with equal power.
  const auto key = [](double p) { return std::llround(p * 1e6); };
  const auto pa = key(a.total_power);
  const auto pb = key(b.total_power);
  if (pa != pb) return pa < pb;
  if (a.choice != b.choice) return a.choice < b.choice;
  return a.total_share < b.total_share;
}

LowestPowerResult select_lowest_power(const EnumerationResult& enumeration,
                                      std::span<const TaskSpec> tasks,
                                      const FleetConfig& config) {
  if (enumeration.feasible.empty()) throw DomainError("no workable combination");

  std::vector<const VariantSelection*> order;
  order.reserve(enumeration.feasible.size());
  for (const VariantSelection& s : enumeration.feasible) order.push_back(&s);
  std::sort(order.begin(), order.end(),
            [](const VariantSelection* a, const VariantSelection* b) {
              return lower_power_first(*a, *b);
            });

  LowestPowerResult result;
  for (const VariantSelection* s : order) {
    if (is_placeable(*s, tasks, config)) {
      result.schedule = build_schedule(*s, tasks, config);
      return result;
    }
    ++result.rejected_by_placement;
  }
  result.schedule = pack_fleet(*order.front(), tasks, config);
  return result;
}

PlacementSurvey survey_placement(std::span<const VariantSelection> feasible,
                                 std::span<const TaskSpec> tasks, const FleetConfig& config) {
  PlacementSurvey survey;
  for (const VariantSelection& s : feasible) {
    if (is_placeable(s, tasks, config)) {
      ++survey.placeable;
    } else {
      ++survey.rejected;
    }
  }
  return survey;
}

std::vector<double> split_data(double data_size, std::span<const double> weights) {
  if (weights.empty()) throw DomainError("split_data needs at least one part");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw DomainError("split_data weights must sum to a positive value");
  if (weights.size() == 1) return {data_size};

  std::vector<double> parts;
  double cumulative = 0.0;
  double prev_boundary = 0.0;
  bool degenerate = false;
  for (std::size_t p = 0; p < weights.size(); ++p) {
    cumulative += weights[p];
    const double boundary = p + 1 == weights.size()
                                ? data_size
                                : std::round(data_size * cumulative / total);
    const double amount = boundary - prev_boundary;
    if (!(amount > 0.0)) degenerate = true;
    parts.push_back(amount);
    prev_boundary = boundary;
  }
  if (!degenerate) return parts;

  parts.clear();
  double assigned = 0.0;
  for (std::size_t p = 0; p + 1 < weights.size(); ++p) {
    parts.push_back(data_size * weights[p] / total);
    assigned += parts.back();
  }
  parts.push_back(data_size - assigned);
  return parts;
}

std::string hardware_image_id(const TaskSpec& task, std::size_t variant_index) {
  if (variant_index >= task.variants.size()) {
    throw DomainError("variant index out of range for task '" + task.name + "'");
  }
  return task.name + "." + std::to_string(task.variants[variant_index].cu_count) + "cu";
}

std::vector<FpgaManifest> make_manifests(const Schedule& schedule,
                                         std::span<const TaskSpec> tasks) {
  if (!schedule.feasible) throw ContractError("manifests require a feasible schedule");
  check_selection(schedule.selection, tasks);

  std::vector<std::size_t> occurrence(tasks.size(), 0);
  std::vector<FpgaManifest> manifests;
  for (const FpgaTimeline& tl : schedule.timelines) {
    FpgaManifest m{tl.fpga_index, {}};
    const auto& segs = tl.segments;
    // Each maximal run of segments tagged with one task is one load of it.
    for (std::size_t i = 0; i < segs.size();) {
      if (!segs[i].task_index) {
        ++i;
        continue;
      }
      const std::size_t k = *segs[i].task_index;
      const std::size_t variant = schedule.selection.choice[k];

      ManifestEntry e;
      e.task_name = tasks[k].name;
      e.variant_cu_count = tasks[k].variants[variant].cu_count;
      e.hardware_image_id = hardware_image_id(tasks[k], variant);
      e.config_start_ms = segs[i].start_ms;
      e.resumed = occurrence[k] > 0;
      for (; i < segs.size() && segs[i].task_index == k; ++i) {
        if (segs[i].kind == SegmentKind::kExec) {
          e.exec_start_ms = segs[i].start_ms;
          e.exec_end_ms = segs[i].end_ms;
        }
      }

      e.data_offset = 0.0;
      e.data_length = tasks[k].data_size;
      for (const SplitDirective& d : schedule.splits) {
        if (d.task_index != k) continue;
        e.data_offset = d.parts.at(occurrence[k]).offset;
        e.data_length = d.parts.at(occurrence[k]).amount;
      }
      ++occurrence[k];
      m.entries.push_back(std::move(e));
    }
    manifests.push_back(std::move(m));
  }
  return manifests;
}

}  // namespace fpgasched

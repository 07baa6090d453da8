// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpgasched/enumeration.hpp"
#include "fpgasched/task_model.hpp"

namespace fpgasched {

enum class SegmentKind { kConfig, kInit, kExec, kNull };

std::string_view to_string(SegmentKind kind);
// Throws InputError on an unknown name.
SegmentKind segment_kind_from_string(std::string_view name);

struct Segment {
  SegmentKind kind = SegmentKind::kNull;
  std::optional<std::size_t> task_index;  // absent for kNull
  double start_ms = 0.0;
  double end_ms = 0.0;

  double duration_ms() const { return end_ms - start_ms; }
  bool operator==(const Segment&) const = default;
};

struct FpgaTimeline {
  std::size_t fpga_index = 0;
  std::vector<Segment> segments;

  bool operator==(const FpgaTimeline&) const = default;
};

// Where packing resumes on the next FPGA: the next task to place and how much
// of its share earlier FPGAs already executed.
struct PackCursor {
  std::size_t next_task = 0;
  double done_share = 0.0;

  bool operator==(const PackCursor&) const = default;
};

struct DataPart {
  std::size_t fpga_index = 0;
  double offset = 0.0;
  double amount = 0.0;

  bool operator==(const DataPart&) const = default;
};

// Input-data partition for a task whose execution spans several FPGAs.
struct SplitDirective {
  std::size_t task_index = 0;
  std::vector<DataPart> parts;  // execution order

  bool operator==(const SplitDirective&) const = default;
};

struct Schedule {
  VariantSelection selection;
  std::vector<FpgaTimeline> timelines;  // one per FPGA
  std::vector<SplitDirective> splits;
  bool feasible = false;

  bool operator==(const Schedule&) const = default;
};

struct PackResult {
  std::vector<Segment> segments;
  PackCursor cursor;
};

// Packs one FPGA of capacity t_slr starting at `cursor`, consuming tasks in
// index order. Each load costs t_cfg; a resumed (split) task additionally
// re-pays its initialization interval. The FPGA closes with a NULL segment
// once the remaining capacity cannot cover t_cfg + II of the next task, or
// after a task is split across its end.
PackResult pack_one_fpga(const VariantSelection& selection, std::span<const TaskSpec> tasks,
                         const FleetConfig& config, PackCursor cursor);

// Runs pack_one_fpga across the fleet. The returned schedule carries the
// (possibly partial) timelines and is marked feasible iff every task was
// fully placed. Splits are filled in for feasible schedules only.
Schedule pack_fleet(const VariantSelection& selection, std::span<const TaskSpec> tasks,
                    const FleetConfig& config);

// Cursor-only fast path: true iff pack_fleet(...).feasible.
bool is_placeable(const VariantSelection& selection, std::span<const TaskSpec> tasks,
                  const FleetConfig& config);

std::optional<Schedule> try_place(const VariantSelection& selection,
                                  std::span<const TaskSpec> tasks, const FleetConfig& config);

// Same packing as try_place, but a placement failure is a ContractError.
Schedule build_schedule(const VariantSelection& selection, std::span<const TaskSpec> tasks,
                        const FleetConfig& config);

// Ascending total power, then lexicographic variant indices, then total share.
bool lower_power_first(const VariantSelection& a, const VariantSelection& b);

struct LowestPowerResult {
  Schedule schedule;  // feasible == false when nothing in TFS places
  // Selections cheaper than the winner that failed placement (== |TFS| when
  // nothing places).
  std::uint64_t rejected_by_placement = 0;
};

// Throws DomainError("no workable combination") when TFS is empty.
LowestPowerResult select_lowest_power(const EnumerationResult& enumeration,
                                      std::span<const TaskSpec> tasks,
                                      const FleetConfig& config);

struct PlacementSurvey {
  std::uint64_t placeable = 0;
  std::uint64_t rejected = 0;
};

// Placement verdict over every feasible row.
PlacementSurvey survey_placement(std::span<const VariantSelection> feasible,
                                 std::span<const TaskSpec> tasks, const FleetConfig& config);

// Splits `data_size` in proportion to `weights` (the EXEC time each FPGA
// spends on the task). Parts are whole data units that sum to data_size
// exactly; when rounding would zero out a part the exact real-valued ratio is
// kept instead.
std::vector<double> split_data(double data_size, std::span<const double> weights);

struct ManifestEntry {
  std::string task_name;
  int variant_cu_count = 0;
  std::string hardware_image_id;
  double data_offset = 0.0;
  double data_length = 0.0;
  double config_start_ms = 0.0;
  double exec_start_ms = 0.0;
  double exec_end_ms = 0.0;
  bool resumed = false;

  bool operator==(const ManifestEntry&) const = default;
};

struct FpgaManifest {
  std::size_t fpga_index = 0;
  std::vector<ManifestEntry> entries;

  bool operator==(const FpgaManifest&) const = default;
};

// Opaque identifier of the pre-built hardware image for one task variant.
std::string hardware_image_id(const TaskSpec& task, std::size_t variant_index);

// One deployment manifest per FPGA for a feasible schedule.
std::vector<FpgaManifest> make_manifests(const Schedule& schedule,
                                         std::span<const TaskSpec> tasks);

}  // namespace fpgasched

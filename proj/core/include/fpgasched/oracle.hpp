// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "fpgasched/placement.hpp"
#include "fpgasched/task_model.hpp"

namespace fpgasched::oracle {

// Brute-force reference for the packing rules. It builds each FPGA's timeline
// one millisecond tick at a time and shares no arithmetic with placement.cpp,
// so it only accepts instances whose times are whole milliseconds.

inline constexpr std::size_t kMaxTasks = 6;
inline constexpr std::int64_t kMaxTicksPerSlice = 100'000;
inline constexpr std::uint64_t kMaxCombinations = 4096;

struct OracleVerdict {
  VariantSelection selection;
  bool workable_eq7 = false;
  bool placeable = false;
  std::optional<Schedule> witness;  // present iff placeable
};

// Throws CapacityError when the instance exceeds the bounds above or any
// share, II, t_slr or t_cfg is not an integral number of milliseconds.
OracleVerdict oracle_placeable(const VariantSelection& selection,
                               std::span<const TaskSpec> tasks, const FleetConfig& config);

}  // namespace fpgasched::oracle

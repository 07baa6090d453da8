// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#pragma once

#include <span>
#include <string>

#include "fpgasched/placement.hpp"
#include "fpgasched/task_model.hpp"

namespace fpgasched {

// EXEC bars are labelled "<k>CU-<task name>".
std::string exec_label(const TaskSpec& task, const VariantSelection& selection,
                       std::size_t task_index);

struct TextGanttOptions {
  int width = 0;  // columns per slice; 0 picks t_slr (capped at 120)
};

// Monospaced chart: '#' CONFIG, '~' INIT, '=' EXEC (label overlaid), '.' NULL.
std::string render_gantt_text(const Schedule& schedule, std::span<const TaskSpec> tasks,
                              const FleetConfig& config, const TextGanttOptions& options = {});

// Standalone SVG document with one lane per FPGA.
std::string render_gantt_svg(const Schedule& schedule, std::span<const TaskSpec> tasks,
                             const FleetConfig& config);

}  // namespace fpgasched

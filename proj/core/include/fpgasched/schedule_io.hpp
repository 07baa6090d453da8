// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "fpgasched/enumeration.hpp"
#include "fpgasched/metrics.hpp"
#include "fpgasched/placement.hpp"
#include "fpgasched/task_model.hpp"

namespace fpgasched {

struct EnumerationSummary {
  std::uint64_t total_combinations = 0;
  std::uint64_t feasible = 0;
  std::uint64_t infeasible = 0;
  double capacity_budget = 0.0;
  std::uint64_t rejected_before_winner = 0;

  bool operator==(const EnumerationSummary&) const = default;
};

// Everything `fpgasched schedule` emits for one run.
struct RunReport {
  FleetConfig config;
  Schedule schedule;
  MetricsReport metrics;
  EnumerationSummary enumeration;
  std::optional<double> elapsed_ms;         // omitted in reproducible mode
  std::optional<std::string> generated_at;  // omitted in reproducible mode
};

// JSON schedule document. Task names and variant CU counts are written next
// to each index for readability; loading reads the indices back.
std::string serialize_run_report(const RunReport& report, std::span<const TaskSpec> tasks);
RunReport parse_run_report(std::string_view document);

std::string serialize_manifest(const FpgaManifest& manifest);
FpgaManifest parse_manifest(std::string_view document);

}  // namespace fpgasched

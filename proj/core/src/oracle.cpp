// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include "fpgasched/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace fpgasched::oracle {
namespace {

std::int64_t whole_ms(double v, const std::string& what) {
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9 || r < 0.0) {
    throw CapacityError("oracle needs whole milliseconds; " + what + " = " + std::to_string(v));
  }
  return static_cast<std::int64_t>(r);
}

struct Tick {
  SegmentKind kind = SegmentKind::kNull;
  std::int64_t task = -1;
};

// Merges runs of identical ticks into segments.
FpgaTimeline to_timeline(std::size_t fpga, const std::vector<Tick>& ticks) {
  FpgaTimeline tl{fpga, {}};
  std::size_t start = 0;
  for (std::size_t t = 1; t <= ticks.size(); ++t) {
    if (t < ticks.size() && ticks[t].kind == ticks[start].kind &&
        ticks[t].task == ticks[start].task) {
      continue;
    }
    Segment s;
    s.kind = ticks[start].kind;
    if (ticks[start].task >= 0) s.task_index = static_cast<std::size_t>(ticks[start].task);
    s.start_ms = static_cast<double>(start);
    s.end_ms = static_cast<double>(t);
    tl.segments.push_back(s);
    start = t;
  }
  return tl;
}

}  // namespace

OracleVerdict oracle_placeable(const VariantSelection& selection,
                               std::span<const TaskSpec> tasks, const FleetConfig& config) {
  const std::size_t n = tasks.size();
  if (n == 0 || n > kMaxTasks) {
    throw CapacityError("oracle handles 1.." + std::to_string(kMaxTasks) + " tasks, got " +
                        std::to_string(n));
  }
  if (selection.shares.size() != n) throw DomainError("selection does not cover every task");

  const std::int64_t slice = whole_ms(config.time_slice_ms, "time_slice_ms");
  const std::int64_t cfg = whole_ms(config.reconfig_time_ms, "reconfig_time_ms");
  if (slice > kMaxTicksPerSlice) {
    throw CapacityError("oracle slice exceeds " + std::to_string(kMaxTicksPerSlice) + " ticks");
  }
  std::vector<std::int64_t> share(n), fill(n);
  std::int64_t share_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    share[i] = whole_ms(selection.shares[i], "share of '" + tasks[i].name + "'");
    fill[i] = whole_ms(tasks[i].init_interval_ms, "init interval of '" + tasks[i].name + "'");
    share_sum += share[i];
  }

  OracleVerdict verdict;
  verdict.selection = selection;
  verdict.workable_eq7 =
      share_sum <= config.n_fpgas * slice - static_cast<std::int64_t>(n + 1) * cfg;

  Schedule witness;
  witness.selection = selection;
  std::size_t next = 0;
  std::int64_t executed = 0;  // ticks of `next` already run on earlier FPGAs

  for (int f = 0; f < config.n_fpgas; ++f) {
    std::vector<Tick> ticks(static_cast<std::size_t>(slice));
    std::int64_t now = 0;
    auto mark = [&](SegmentKind kind, std::size_t task) {
      ticks[static_cast<std::size_t>(now)] = {kind, static_cast<std::int64_t>(task)};
      ++now;
    };

    while (next < n) {
      const std::int64_t free_ticks = slice - now;
      if (free_ticks <= cfg + fill[next]) break;

      for (std::int64_t c = 0; c < cfg; ++c) mark(SegmentKind::kConfig, next);
      if (executed > 0) {
        for (std::int64_t c = 0; c < fill[next]; ++c) mark(SegmentKind::kInit, next);
      }
      while (now < slice && executed < share[next]) {
        mark(SegmentKind::kExec, next);
        ++executed;
      }
      if (executed < share[next]) break;  // slice full, resume on the next FPGA
      ++next;
      executed = 0;
    }
    witness.timelines.push_back(to_timeline(static_cast<std::size_t>(f), ticks));
  }

  verdict.placeable = next == n;
  if (verdict.placeable) {
    witness.feasible = true;
    verdict.witness = std::move(witness);
  }
  return verdict;
}

}  // namespace fpgasched::oracle

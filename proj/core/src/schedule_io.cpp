// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include "fpgasched/schedule_io.hpp"

#include <nlohmann/json.hpp>

#include "json_fields.hpp"

namespace fpgasched {

using nlohmann::json;
using detail::require_bool;
using detail::require_field;
using detail::require_int;
using detail::require_number;
using detail::require_string;

namespace {

constexpr const char* kScheduleFormat = "fpgasched-schedule/1";
constexpr const char* kManifestFormat = "fpgasched-manifest/1";

json parse_json(std::string_view document, const char* what) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

const json& require_array(const json& node, const char* key, const std::string& path) {
  const json& v = require_field(node, key, path);
  if (!v.is_array()) throw InputError(path + "." + key + ": expected an array");
  return v;
}

std::uint64_t require_count(const json& node, const char* key, const std::string& path) {
  const json& v = require_field(node, key, path);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw InputError(path + "." + key + ": expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

json selection_to_json(const VariantSelection& s, std::span<const TaskSpec> tasks) {
  json names = json::array();
  json cus = json::array();
  for (std::size_t i = 0; i < s.choice.size(); ++i) {
    names.push_back(tasks[i].name);
    cus.push_back(tasks[i].variants[s.choice[i]].cu_count);
  }
  return {{"tasks", std::move(names)},
          {"variant_index", s.choice},
          {"cu_count", std::move(cus)},
          {"shares_ms", s.shares},
          {"total_share_ms", s.total_share},
          {"total_power_mw", s.total_power}};
}

VariantSelection selection_from_json(const json& node) {
  detail::require_object(node, "selection");
  VariantSelection s;
  for (const json& v : require_array(node, "variant_index", "selection")) {
    if (!v.is_number_unsigned()) throw InputError("selection.variant_index: expected indices");
    s.choice.push_back(v.get<std::size_t>());
  }
  for (const json& v : require_array(node, "shares_ms", "selection")) {
    if (!v.is_number()) throw InputError("selection.shares_ms: expected numbers");
    s.shares.push_back(v.get<double>());
  }
  if (s.choice.size() != s.shares.size()) {
    throw InputError("selection: variant_index and shares_ms differ in length");
  }
  s.total_share = require_number(node, "total_share_ms", "selection");
  s.total_power = require_number(node, "total_power_mw", "selection");
  return s;
}

json segment_to_json(const Segment& seg, std::span<const TaskSpec> tasks) {
  json j = {{"kind", std::string(to_string(seg.kind))},
            {"start_ms", seg.start_ms},
            {"end_ms", seg.end_ms}};
  if (seg.task_index) {
    j["task"] = *seg.task_index;
    j["task_name"] = tasks[*seg.task_index].name;
  }
  return j;
}

Segment segment_from_json(const json& node, const std::string& path) {
  detail::require_object(node, path);
  Segment s;
  s.kind = segment_kind_from_string(require_string(node, "kind", path));
  s.start_ms = require_number(node, "start_ms", path);
  s.end_ms = require_number(node, "end_ms", path);
  if (auto it = node.find("task"); it != node.end()) {
    if (!it->is_number_unsigned()) throw InputError(path + ".task: expected an index");
    s.task_index = it->get<std::size_t>();
  }
  return s;
}

json metrics_to_json(const MetricsReport& m) {
  return {{"total_combinations", m.total_combinations},
          {"rejected_eq7", m.rejected_eq7},
          {"rejected_placement", m.rejected_placement},
          {"trr_percent", m.trr_percent},
          {"system_workload_percent", m.system_workload_percent},
          {"avg_task_weight", m.avg_task_weight},
          {"nc_max", m.nc_max ? json(*m.nc_max) : json(nullptr)},
          {"total_power_mw", m.total_power_mw},
          {"total_null_ms", m.total_null_ms},
          {"primary_workability", m.primary_workability}};
}

MetricsReport metrics_from_json(const json& node) {
  const std::string path = "metrics";
  detail::require_object(node, path);
  MetricsReport m;
  m.total_combinations = require_count(node, "total_combinations", path);
  m.rejected_eq7 = require_count(node, "rejected_eq7", path);
  m.rejected_placement = require_count(node, "rejected_placement", path);
  m.trr_percent = require_number(node, "trr_percent", path);
  m.system_workload_percent = require_number(node, "system_workload_percent", path);
  m.avg_task_weight = require_number(node, "avg_task_weight", path);
  const json& nc = require_field(node, "nc_max", path);
  if (!nc.is_null()) m.nc_max = require_number(node, "nc_max", path);
  m.total_power_mw = require_number(node, "total_power_mw", path);
  m.total_null_ms = require_number(node, "total_null_ms", path);
  m.primary_workability = require_bool(node, "primary_workability", path);
  return m;
}

json manifest_to_json(const FpgaManifest& m) {
  json entries = json::array();
  for (const ManifestEntry& e : m.entries) {
    entries.push_back({{"task_name", e.task_name},
                       {"variant_cu_count", e.variant_cu_count},
                       {"hardware_image_id", e.hardware_image_id},
                       {"data_part", {{"offset", e.data_offset}, {"length", e.data_length}}},
                       {"config_start_ms", e.config_start_ms},
                       {"exec_window_ms", {e.exec_start_ms, e.exec_end_ms}},
                       {"resumed", e.resumed}});
  }
  return {{"format", kManifestFormat}, {"fpga", m.fpga_index}, {"entries", std::move(entries)}};
}

}  // namespace

std::string serialize_run_report(const RunReport& report, std::span<const TaskSpec> tasks) {
  const Schedule& s = report.schedule;
  json root;
  root["format"] = kScheduleFormat;
  root["config"] = {{"n_fpgas", report.config.n_fpgas},
                    {"time_slice_ms", report.config.time_slice_ms},
                    {"reconfig_time_ms", report.config.reconfig_time_ms}};
  root["feasible"] = s.feasible;
  root["selection"] = selection_to_json(s.selection, tasks);

  json timelines = json::array();
  for (const FpgaTimeline& tl : s.timelines) {
    json segs = json::array();
    for (const Segment& seg : tl.segments) segs.push_back(segment_to_json(seg, tasks));
    timelines.push_back({{"fpga", tl.fpga_index}, {"segments", std::move(segs)}});
  }
  root["timelines"] = std::move(timelines);

  json splits = json::array();
  for (const SplitDirective& d : s.splits) {
    json parts = json::array();
    for (const DataPart& p : d.parts) {
      parts.push_back({{"fpga", p.fpga_index}, {"offset", p.offset}, {"amount", p.amount}});
    }
    splits.push_back(
        {{"task", d.task_index}, {"task_name", tasks[d.task_index].name}, {"parts", parts}});
  }
  root["splits"] = std::move(splits);

  json manifests = json::array();
  if (s.feasible) {
    for (const FpgaManifest& m : make_manifests(s, tasks)) manifests.push_back(manifest_to_json(m));
  }
  root["manifests"] = std::move(manifests);

  root["metrics"] = metrics_to_json(report.metrics);
  root["enumeration"] = {{"total_combinations", report.enumeration.total_combinations},
                         {"feasible", report.enumeration.feasible},
                         {"infeasible", report.enumeration.infeasible},
                         {"capacity_budget_ms", report.enumeration.capacity_budget},
                         {"rejected_before_winner", report.enumeration.rejected_before_winner}};
  if (report.elapsed_ms) root["elapsed_ms"] = *report.elapsed_ms;
  if (report.generated_at) root["generated_at"] = *report.generated_at;
  return root.dump(2) + "\n";
}

RunReport parse_run_report(std::string_view document) {
  const json root = parse_json(document, "schedule document");
  detail::require_object(root, "$");
  if (require_string(root, "format", "$") != kScheduleFormat) {
    throw InputError("$.format: expected '" + std::string(kScheduleFormat) + "'");
  }

  RunReport r;
  const json& cfg = require_field(root, "config", "$");
  detail::require_object(cfg, "config");
  r.config.n_fpgas = require_int(cfg, "n_fpgas", "config");
  r.config.time_slice_ms = require_number(cfg, "time_slice_ms", "config");
  r.config.reconfig_time_ms = require_number(cfg, "reconfig_time_ms", "config");

  Schedule& s = r.schedule;
  s.feasible = require_bool(root, "feasible", "$");
  s.selection = selection_from_json(require_field(root, "selection", "$"));

  const json& timelines = require_array(root, "timelines", "$");
  for (std::size_t f = 0; f < timelines.size(); ++f) {
    const std::string path = "timelines[" + std::to_string(f) + "]";
    FpgaTimeline tl;
    tl.fpga_index = static_cast<std::size_t>(require_int(timelines[f], "fpga", path));
    const json& segs = require_array(timelines[f], "segments", path);
    for (std::size_t i = 0; i < segs.size(); ++i) {
      tl.segments.push_back(segment_from_json(segs[i], path + ".segments[" + std::to_string(i) + "]"));
    }
    s.timelines.push_back(std::move(tl));
  }

  const json& splits = require_array(root, "splits", "$");
  for (std::size_t i = 0; i < splits.size(); ++i) {
    const std::string path = "splits[" + std::to_string(i) + "]";
    SplitDirective d;
    d.task_index = static_cast<std::size_t>(require_int(splits[i], "task", path));
    for (const json& p : require_array(splits[i], "parts", path)) {
      d.parts.push_back({static_cast<std::size_t>(require_int(p, "fpga", path + ".parts")),
                         require_number(p, "offset", path + ".parts"),
                         require_number(p, "amount", path + ".parts")});
    }
    s.splits.push_back(std::move(d));
  }

  r.metrics = metrics_from_json(require_field(root, "metrics", "$"));
  const json& en = require_field(root, "enumeration", "$");
  r.enumeration.total_combinations = require_count(en, "total_combinations", "enumeration");
  r.enumeration.feasible = require_count(en, "feasible", "enumeration");
  r.enumeration.infeasible = require_count(en, "infeasible", "enumeration");
  r.enumeration.capacity_budget = require_number(en, "capacity_budget_ms", "enumeration");
  r.enumeration.rejected_before_winner =
      require_count(en, "rejected_before_winner", "enumeration");
  if (auto it = root.find("elapsed_ms"); it != root.end()) r.elapsed_ms = it->get<double>();
  if (auto it = root.find("generated_at"); it != root.end()) {
    r.generated_at = it->get<std::string>();
  }
  return r;
}

std::string serialize_manifest(const FpgaManifest& manifest) {
  return manifest_to_json(manifest).dump(2) + "\n";
}

FpgaManifest parse_manifest(std::string_view document) {
  const json root = parse_json(document, "manifest");
  detail::require_object(root, "$");
  if (require_string(root, "format", "$") != kManifestFormat) {
    throw InputError("$.format: expected '" + std::string(kManifestFormat) + "'");
  }
  FpgaManifest m;
  m.fpga_index = static_cast<std::size_t>(require_int(root, "fpga", "$"));
  const json& entries = require_array(root, "entries", "$");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = "entries[" + std::to_string(i) + "]";
    const json& e = entries[i];
    ManifestEntry me;
    me.task_name = require_string(e, "task_name", path);
    me.variant_cu_count = require_int(e, "variant_cu_count", path);
    me.hardware_image_id = require_string(e, "hardware_image_id", path);
    const json& part = require_field(e, "data_part", path);
    me.data_offset = require_number(part, "offset", path + ".data_part");
    me.data_length = require_number(part, "length", path + ".data_part");
    me.config_start_ms = require_number(e, "config_start_ms", path);
    const json& window = require_field(e, "exec_window_ms", path);
    if (!window.is_array() || window.size() != 2) {
      throw InputError(path + ".exec_window_ms: expected [start, end]");
    }
    me.exec_start_ms = window[0].get<double>();
    me.exec_end_ms = window[1].get<double>();
    me.resumed = require_bool(e, "resumed", path);
    m.entries.push_back(std::move(me));
  }
  return m;
}

}  // namespace fpgasched

// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include "fpgasched/taskset_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "json_fields.hpp"

namespace fpgasched {

using nlohmann::json;
using detail::require_field;
using detail::require_int;
using detail::require_number;
using detail::require_string;

namespace {

VariantSpec parse_variant(const json& node, const std::string& path) {
  detail::require_object(node, path);
  VariantSpec v;
  v.cu_count = require_int(node, "cu_count", path);
  v.throughput = require_number(node, "throughput_per_ms", path);
  v.power_mw = require_number(node, "power_mw", path);
  return v;
}

TaskSpec parse_task(const json& node, const std::string& path) {
  detail::require_object(node, path);
  TaskSpec t;
  t.name = require_string(node, "name", path);
  const std::string named = path + " ('" + t.name + "')";
  t.period_ms = require_number(node, "period_ms", named);
  t.init_interval_ms = require_number(node, "init_interval_ms", named);
  t.data_size = require_number(node, "data_size", named);
  const json& variants = require_field(node, "variants", named);
  if (!variants.is_array()) throw InputError(named + ".variants: expected an array");
  if (variants.empty()) throw InputError(named + ".variants: must be non-empty");
  for (std::size_t j = 0; j < variants.size(); ++j) {
    t.variants.push_back(parse_variant(variants[j], named + ".variants[" + std::to_string(j) + "]"));
  }
  return t;
}

}  // namespace

TaskSet parse_taskset(std::string_view document) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed task-set document: ") + e.what());
  }
  detail::require_object(root, "$");

  TaskSet ts;
  const json& cfg = require_field(root, "config", "$");
  detail::require_object(cfg, "config");
  ts.config.n_fpgas = require_int(cfg, "n_fpgas", "config");
  ts.config.time_slice_ms = require_number(cfg, "time_slice_ms", "config");
  ts.config.reconfig_time_ms = require_number(cfg, "reconfig_time_ms", "config");

  const json& tasks = require_field(root, "tasks", "$");
  if (!tasks.is_array()) throw InputError("tasks: expected an array");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    ts.tasks.push_back(parse_task(tasks[i], "tasks[" + std::to_string(i) + "]"));
  }

  try {
    validate_taskset(ts.tasks, ts.config);
  } catch (const InputError& e) {
    throw InputError(std::string("invalid task set: ") + e.what());
  }
  return ts;
}

TaskSet load_taskset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open task-set file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_taskset(buf.str());
}

std::string serialize_taskset(const TaskSet& taskset) {
  json root;
  root["config"] = {{"n_fpgas", taskset.config.n_fpgas},
                    {"time_slice_ms", taskset.config.time_slice_ms},
                    {"reconfig_time_ms", taskset.config.reconfig_time_ms}};
  json tasks = json::array();
  for (const TaskSpec& t : taskset.tasks) {
    json variants = json::array();
    for (const VariantSpec& v : t.variants) {
      variants.push_back({{"cu_count", v.cu_count},
                          {"throughput_per_ms", v.throughput},
                          {"power_mw", v.power_mw}});
    }
    tasks.push_back({{"name", t.name},
                     {"period_ms", t.period_ms},
                     {"init_interval_ms", t.init_interval_ms},
                     {"data_size", t.data_size},
                     {"variants", std::move(variants)}});
  }
  root["tasks"] = std::move(tasks);
  return root.dump(2) + "\n";
}

}  // namespace fpgasched

// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fpgasched/enumeration.hpp"
#include "fpgasched/gantt.hpp"
#include "fpgasched/metrics.hpp"
#include "fpgasched/oracle.hpp"
#include "fpgasched/placement.hpp"
#include "fpgasched/schedule_io.hpp"
#include "fpgasched/taskset_io.hpp"

namespace fpgasched::cli {
namespace fs = std::filesystem;

namespace {

// Flags shared by every subcommand that loads a task set.
struct CommonOptions {
  std::string input;
  std::optional<int> fpgas;
  std::optional<double> slice_ms;
  std::optional<double> cfg_time_ms;
  std::uint64_t limit = kDefaultCombinationLimit;
  WorkabilityBudget budget = kDefaultWorkabilityBudget;
};

struct ScheduleOptions {
  CommonOptions common;
  std::vector<std::string> gantt;
  std::string out_dir;
  std::string dump_rejected;
  bool timestamps = false;
};

struct SweepCliOptions {
  CommonOptions common;
  std::string fpga_range;
  std::string cfg_range;
  std::string out_file;
  std::string delimiter = ",";
};

void add_input(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("input", o.input, "Task-set JSON file")->required();
  cmd->add_option("--limit", o.limit, "Maximum number of variant combinations to enumerate")
      ->capture_default_str();
  const std::map<std::string, WorkabilityBudget> rules{
      {"per-task", WorkabilityBudget::kTaskConfigs},
      {"per-task-plus-one", WorkabilityBudget::kTaskConfigsPlusOne}};
  cmd->add_option("--reserve-configs", o.budget,
                  "Reconfigurations reserved by the workability budget")
      ->transform(CLI::CheckedTransformer(rules, CLI::ignore_case))
      ->default_str("per-task-plus-one");
}

void add_overrides(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--fpgas", o.fpgas, "Override config.n_fpgas");
  cmd->add_option("--slice-ms", o.slice_ms, "Override config.time_slice_ms");
  cmd->add_option("--cfg-time-ms", o.cfg_time_ms, "Override config.reconfig_time_ms");
}

TaskSet load(const CommonOptions& o) {
  TaskSet ts = load_taskset(o.input);
  if (o.fpgas) ts.config.n_fpgas = *o.fpgas;
  if (o.slice_ms) ts.config.time_slice_ms = *o.slice_ms;
  if (o.cfg_time_ms) ts.config.reconfig_time_ms = *o.cfg_time_ms;
  validate_config(ts.config);
  return ts;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path.string() + "'");
  f << content;
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream o;
  o << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return o.str();
}

std::string join_shares(const VariantSelection& s) {
  std::ostringstream o;
  o << '[';
  for (std::size_t i = 0; i < s.shares.size(); ++i) {
    o << (i ? ", " : "") << std::setprecision(6) << s.shares[i];
  }
  o << ']';
  return o.str();
}

int cmd_schedule(const ScheduleOptions& o, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const TaskSet ts = load(o.common);
  for (const std::string& g : o.gantt) {
    if (g == "vector" && o.out_dir.empty()) throw InputError("--gantt vector requires --out");
  }

  EnumerationOptions eopts;
  eopts.limit = o.common.limit;
  eopts.budget = o.common.budget;
  std::ofstream rejected_log;
  if (!o.dump_rejected.empty()) {
    rejected_log.open(o.dump_rejected);
    if (!rejected_log) throw InputError("cannot write '" + o.dump_rejected + "'");
    eopts.on_infeasible = [&](const VariantSelection& s) {
      rejected_log << s.total_share << '\t' << join_shares(s) << '\n';
    };
  }
  const EnumerationResult e = enumerate(ts.tasks, ts.config, eopts);
  if (e.feasible.empty()) {
    err << "no feasible combination: none of the " << e.total_combinations
        << " variant combinations fits the workability budget of " << e.capacity_budget
        << " ms\n";
    return kNoFeasibleCombination;
  }

  const LowestPowerResult chosen = select_lowest_power(e, ts.tasks, ts.config);
  const PlacementSurvey survey = survey_placement(e.feasible, ts.tasks, ts.config);

  RunReport report;
  report.config = ts.config;
  report.schedule = chosen.schedule;
  report.metrics = make_report(ts.tasks, ts.config, e, survey, chosen.schedule);
  report.enumeration = {e.total_combinations, e.feasible.size(), e.infeasible_count,
                        e.capacity_budget, chosen.rejected_by_placement};
  if (o.timestamps) {
    report.generated_at = utc_now();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  const std::string document = serialize_run_report(report, ts.tasks);

  const bool want_text = std::find(o.gantt.begin(), o.gantt.end(), "text") != o.gantt.end();
  const bool want_svg = std::find(o.gantt.begin(), o.gantt.end(), "vector") != o.gantt.end();
  if (o.out_dir.empty()) {
    out << document;
    if (want_text) err << render_gantt_text(report.schedule, ts.tasks, ts.config);
  } else {
    const fs::path dir(o.out_dir);
    fs::create_directories(dir / "manifests");
    write_file(dir / "schedule.json", document);
    if (report.schedule.feasible) {
      for (const FpgaManifest& m : make_manifests(report.schedule, ts.tasks)) {
        write_file(dir / "manifests" / ("F" + std::to_string(m.fpga_index + 1) + ".json"),
                   serialize_manifest(m));
      }
    }
    if (want_text) {
      write_file(dir / "gantt.txt", render_gantt_text(report.schedule, ts.tasks, ts.config));
    }
    if (want_svg) {
      write_file(dir / "gantt.svg", render_gantt_svg(report.schedule, ts.tasks, ts.config));
    }
    out << (report.schedule.feasible ? "feasible" : "infeasible") << ": shares "
        << join_shares(report.schedule.selection) << ", power "
        << report.schedule.selection.total_power << " mW, TRR " << std::fixed
        << std::setprecision(2) << report.metrics.trr_percent << std::defaultfloat << "% -> "
        << dir.string() << '\n';
  }

  if (!report.schedule.feasible) {
    err << "no feasible combination: all " << e.feasible.size()
        << " workable combinations failed placement on " << ts.config.n_fpgas << " FPGAs\n";
    return kNoFeasibleCombination;
  }
  return kOk;
}

int cmd_sweep(const SweepCliOptions& o, std::ostream& out) {
  const TaskSet ts = load(o.common);
  const std::vector<int> fpgas =
      o.fpga_range.empty() ? std::vector<int>{ts.config.n_fpgas} : parse_int_list(o.fpga_range);
  const std::vector<double> cfgs = o.cfg_range.empty()
                                       ? std::vector<double>{ts.config.reconfig_time_ms}
                                       : parse_double_list(o.cfg_range);
  if (o.delimiter.size() != 1) throw InputError("--delimiter must be a single character");

  SweepOptions sopts;
  sopts.limit = o.common.limit;
  sopts.budget = o.common.budget;
  const std::vector<SweepRow> rows = sweep(ts.tasks, ts.config, fpgas, cfgs, sopts);
  const std::string table = format_sweep_table(rows, o.delimiter[0]);
  if (o.out_file.empty()) {
    out << table;
  } else {
    write_file(o.out_file, table);
  }
  return kOk;
}

// Rounds every time quantity of one row to whole milliseconds so the tick
// oracle can judge it.
struct QuantizedRow {
  std::vector<TaskSpec> tasks;
  FleetConfig config;
  VariantSelection selection;
  bool rounded = false;
};

QuantizedRow quantize(const VariantSelection& s, const std::vector<TaskSpec>& tasks,
                      const FleetConfig& config) {
  QuantizedRow q{tasks, config, s, false};
  const auto snap = [&q](double& v) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9) q.rounded = true;
    v = r;
  };
  snap(q.config.time_slice_ms);
  snap(q.config.reconfig_time_ms);
  for (TaskSpec& t : q.tasks) snap(t.init_interval_ms);
  q.selection.total_share = 0.0;
  for (double& sh : q.selection.shares) {
    snap(sh);
    q.selection.total_share += sh;
  }
  return q;
}

int cmd_verify(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const TaskSet ts = load(o);
  if (ts.tasks.size() > oracle::kMaxTasks) {
    throw CapacityError("oracle capacity exceeded: " + std::to_string(ts.tasks.size()) +
                        " tasks (max " + std::to_string(oracle::kMaxTasks) + ")");
  }
  const std::uint64_t combos = combination_count(ts.tasks);
  if (combos > oracle::kMaxCombinations) {
    throw CapacityError("oracle capacity exceeded: " + std::to_string(combos) +
                        " combinations (max " + std::to_string(oracle::kMaxCombinations) + ")");
  }

  EnumerationOptions eopts;
  eopts.limit = std::min<std::uint64_t>(o.limit, oracle::kMaxCombinations);
  eopts.budget = o.budget;
  const EnumerationResult e = enumerate(ts.tasks, ts.config, eopts);

  std::uint64_t disagreements = 0, rounded = 0, placeable = 0;
  for (const VariantSelection& row : e.feasible) {
    const QuantizedRow q = quantize(row, ts.tasks, ts.config);
    if (q.rounded) ++rounded;
    const Schedule engine = pack_fleet(q.selection, q.tasks, q.config);
    const oracle::OracleVerdict verdict = oracle::oracle_placeable(q.selection, q.tasks, q.config);
    bool agree = engine.feasible == verdict.placeable;
    if (agree && verdict.witness) agree = engine.timelines == verdict.witness->timelines;
    if (engine.feasible) ++placeable;
    if (!agree) {
      ++disagreements;
      err << "disagreement on shares " << join_shares(q.selection) << ": engine "
          << (engine.feasible ? "placeable" : "unplaceable") << ", oracle "
          << (verdict.placeable ? "placeable" : "unplaceable") << '\n';
    }
  }

  out << "verified " << e.feasible.size() << " workable combinations (" << placeable
      << " placeable): " << disagreements << " disagreements";
  if (rounded > 0) out << ", " << rounded << " rows rounded to whole ms";
  out << '\n';
  return disagreements == 0 ? kOk : kVerifyMismatch;
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> values;
  std::stringstream items(text);
  std::string item;
  const auto number = [&text](const std::string& s) -> T {
    std::size_t used = 0;
    T v{};
    try {
      if constexpr (std::is_integral_v<T>) {
        v = static_cast<T>(std::stol(s, &used));
      } else {
        v = static_cast<T>(std::stod(s, &used));
      }
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InputError("bad range '" + text + "'");
    return v;
  };
  while (std::getline(items, item, ',')) {
    if (item.empty()) throw InputError("bad range '" + text + "'");
    std::vector<std::string> parts;
    std::stringstream ps(item);
    std::string p;
    while (std::getline(ps, p, ':')) parts.push_back(p);
    if (parts.size() == 1) {
      values.push_back(number(parts[0]));
      continue;
    }
    if (parts.size() > 3) throw InputError("bad range '" + text + "'");
    const T lo = number(parts[0]);
    const T hi = number(parts[1]);
    const T step = parts.size() == 3 ? number(parts[2]) : T{1};
    if (!(step > T{0}) || hi < lo) throw InputError("bad range '" + text + "'");
    const auto n = static_cast<long>(std::floor((hi - lo) / static_cast<double>(step) + 1e-9));
    for (long i = 0; i <= n; ++i) values.push_back(static_cast<T>(lo + i * step));
  }
  if (values.empty()) throw InputError("empty range");
  return values;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) { return parse_list<int>(text); }
std::vector<double> parse_double_list(const std::string& text) {
  return parse_list<double>(text);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power-aware scheduler for periodic hardware tasks on an FPGA fleet",
               "fpgasched"};
  app.require_subcommand(1);

  ScheduleOptions sched;
  CLI::App* schedule = app.add_subcommand(
      "schedule", "Pick the lowest-power placeable variant combination and emit its schedule");
  add_input(schedule, sched.common);
  add_overrides(schedule, sched.common);
  schedule->add_option("--gantt", sched.gantt, "Gantt rendering(s): text, vector")
      ->check(CLI::IsMember({"text", "vector"}));
  schedule->add_option("--out", sched.out_dir,
                       "Directory for schedule.json, manifests/ and Gantt files");
  schedule->add_option("--dump-rejected", sched.dump_rejected,
                       "Stream combinations failing the workability test to this file");
  schedule->add_flag("--timestamps", sched.timestamps,
                     "Add generated_at / elapsed_ms (output is no longer reproducible)");

  SweepCliOptions sw;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Rejection and workload table over n_f x t_cfg");
  add_input(sweep_cmd, sw.common);
  sweep_cmd->add_option("--fpgas", sw.fpga_range, "FPGA counts, e.g. 3:6 or 3,4,6");
  sweep_cmd->add_option("--cfg-time-ms", sw.cfg_range, "Reconfiguration times, e.g. 2:8:2");
  sweep_cmd->add_option("--slice-ms", sw.common.slice_ms, "Override config.time_slice_ms");
  sweep_cmd->add_option("--delimiter", sw.delimiter, "Column delimiter")->capture_default_str();
  sweep_cmd->add_option("--out", sw.out_file, "Write the table to this file");

  CommonOptions ver;
  CLI::App* verify =
      app.add_subcommand("verify", "Cross-check placement against the brute-force oracle");
  add_input(verify, ver);
  add_overrides(verify, ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*schedule) return cmd_schedule(sched, out, err);
    if (*sweep_cmd) return cmd_sweep(sw, out);
    if (*verify) return cmd_verify(ver, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacityExceeded;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("fpgasched");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fpgasched::cli

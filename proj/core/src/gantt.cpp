// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The fpgasched Authors

#include "fpgasched/gantt.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace fpgasched {
namespace {

char fill_char(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::kConfig: return '#';
    case SegmentKind::kInit: return '~';
    case SegmentKind::kExec: return '=';
    case SegmentKind::kNull: return '.';
  }
  return ' ';
}

const char* svg_fill(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::kConfig: return "url(#cfg)";
    case SegmentKind::kInit: return "url(#init)";
    case SegmentKind::kExec: return "#9ecae1";
    case SegmentKind::kNull: return "url(#null)";
  }
  return "none";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt_ms(double v) {
  std::ostringstream o;
  o << std::setprecision(6) << v;
  return o.str();
}

}  // namespace

std::string exec_label(const TaskSpec& task, const VariantSelection& selection,
                       std::size_t task_index) {
  return std::to_string(task.variants.at(selection.choice.at(task_index)).cu_count) + "CU-" +
         task.name;
}

std::string render_gantt_text(const Schedule& schedule, std::span<const TaskSpec> tasks,
                              const FleetConfig& config, const TextGanttOptions& options) {
  const double slice = config.time_slice_ms;
  int width = options.width;
  if (width <= 0) width = std::clamp(static_cast<int>(std::ceil(slice)), 10, 120);

  std::ostringstream out;
  out << "slice " << fmt_ms(slice) << " ms, 1 column = " << fmt_ms(slice / width) << " ms"
      << (schedule.feasible ? "" : "  [INFEASIBLE]") << "\n";

  for (const FpgaTimeline& tl : schedule.timelines) {
    std::string row(static_cast<std::size_t>(width), ' ');
    for (int c = 0; c < width; ++c) {
      const double t = (c + 0.5) * slice / width;
      for (const Segment& s : tl.segments) {
        if (t >= s.start_ms && t < s.end_ms) {
          row[static_cast<std::size_t>(c)] = fill_char(s.kind);
          break;
        }
      }
    }
    // Overlay labels on EXEC bars that are wide enough to hold them.
    for (const Segment& s : tl.segments) {
      if (s.kind != SegmentKind::kExec || !s.task_index) continue;
      const std::string label = exec_label(tasks[*s.task_index], schedule.selection, *s.task_index);
      const int c0 = static_cast<int>(std::lround(s.start_ms / slice * width));
      const int c1 = static_cast<int>(std::lround(s.end_ms / slice * width));
      const int span = c1 - c0;
      if (span < static_cast<int>(label.size()) + 2) continue;
      const int at = c0 + (span - static_cast<int>(label.size())) / 2;
      row.replace(static_cast<std::size_t>(at), label.size(), label);
    }
    out << 'F' << std::setw(2) << std::left << tl.fpga_index + 1 << std::right << '|' << row
        << "|\n";
  }
  out << "legend: # CONFIG  ~ INIT  = EXEC  . NULL\n";
  return out.str();
}

std::string render_gantt_svg(const Schedule& schedule, std::span<const TaskSpec> tasks,
                             const FleetConfig& config) {
  constexpr double kLeft = 50.0;
  constexpr double kPlotWidth = 720.0;
  constexpr double kLane = 36.0;
  constexpr double kGap = 10.0;
  const double slice = config.time_slice_ms;
  const auto lanes = static_cast<double>(schedule.timelines.size());
  const double height = 30.0 + lanes * (kLane + kGap) + 40.0;
  const double width = kLeft + kPlotWidth + 20.0;
  const auto x_of = [&](double t) { return kLeft + t / slice * kPlotWidth; };

  std::ostringstream o;
  o << std::setprecision(6);
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"monospace\" "
    << "font-size=\"11\">\n"
    << "  <defs>\n"
    << "    <pattern id=\"cfg\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
       "patternTransform=\"rotate(45)\"><rect width=\"6\" height=\"6\" fill=\"#fdd0a2\"/>"
       "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#e6550d\" stroke-width=\"2\"/>"
       "</pattern>\n"
    << "    <pattern id=\"init\" width=\"4\" height=\"4\" patternUnits=\"userSpaceOnUse\">"
       "<rect width=\"4\" height=\"4\" fill=\"#e5f5e0\"/>"
       "<circle cx=\"2\" cy=\"2\" r=\"1\" fill=\"#31a354\"/></pattern>\n"
    << "    <pattern id=\"null\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">"
       "<rect width=\"6\" height=\"6\" fill=\"#f0f0f0\"/>"
       "<path d=\"M0,0 L6,6 M6,0 L0,6\" stroke=\"#bdbdbd\" stroke-width=\"0.8\"/></pattern>\n"
    << "  </defs>\n";
  if (!schedule.feasible) {
    o << "  <text x=\"" << kLeft << "\" y=\"16\" fill=\"#b30000\">INFEASIBLE</text>\n";
  }

  for (std::size_t lane = 0; lane < schedule.timelines.size(); ++lane) {
    const FpgaTimeline& tl = schedule.timelines[lane];
    const double y = 24.0 + static_cast<double>(lane) * (kLane + kGap);
    o << "  <text x=\"8\" y=\"" << y + kLane / 2 + 4 << "\">F" << tl.fpga_index + 1 << "</text>\n";
    for (const Segment& s : tl.segments) {
      const double x0 = x_of(s.start_ms);
      const double w = x_of(s.end_ms) - x0;
      o << "  <rect class=\"" << to_string(s.kind) << "\" x=\"" << x0 << "\" y=\"" << y
        << "\" width=\"" << w << "\" height=\"" << kLane << "\" fill=\"" << svg_fill(s.kind)
        << "\" stroke=\"#636363\" stroke-width=\"0.5\">"
        << "<title>" << to_string(s.kind);
      if (s.task_index) o << ' ' << xml_escape(tasks[*s.task_index].name);
      o << ' ' << s.start_ms << "-" << s.end_ms << " ms</title></rect>\n";
      if (s.kind == SegmentKind::kExec && s.task_index) {
        o << "  <text x=\"" << x0 + w / 2 << "\" y=\"" << y + kLane / 2 + 4
          << "\" text-anchor=\"middle\">"
          << xml_escape(exec_label(tasks[*s.task_index], schedule.selection, *s.task_index))
          << "</text>\n";
      }
    }
  }

  const double axis_y = 24.0 + lanes * (kLane + kGap);
  o << "  <line x1=\"" << kLeft << "\" y1=\"" << axis_y << "\" x2=\"" << kLeft + kPlotWidth
    << "\" y2=\"" << axis_y << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 10; ++tick) {
    const double t = slice * tick / 10.0;
    o << "  <text x=\"" << x_of(t) << "\" y=\"" << axis_y + 14
      << "\" text-anchor=\"middle\">" << t << "</text>\n";
  }
  o << "  <text x=\"" << kLeft + kPlotWidth / 2 << "\" y=\"" << axis_y + 30
    << "\" text-anchor=\"middle\">time (ms)</text>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace fpgasched

#include "motesim/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "motesim/errors.hpp"

namespace motesim {

namespace {

constexpr const char* kCsvHeader =
    "time_s,node_id,role,cpu_ticks,lpm_ticks,tx_ticks,rx_ticks,"
    "interval_energy_mj,cumulative_energy_mj,verdict_state,suspicion_p";

Role role_from_name(const std::string& name) {
  if (name == "normal") return Role::normal;
  if (name == "anchor") return Role::anchor;
  if (name == "attacker") return Role::attacker;
  throw ValidationError("csv: unknown role '" + name + "'");
}

VerdictState verdict_from_name(const std::string& name) {
  if (name == "clean") return VerdictState::clean;
  if (name == "suspected") return VerdictState::suspected;
  if (name == "attacker") return VerdictState::attacker;
  throw ValidationError("csv: unknown verdict state '" + name + "'");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == sep) {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  return fields;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ValidationError("csv: bad " + what + " '" + text + "'");
  }
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("csv: bad " + what + " '" + text + "'");
  }
  return value;
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string run_csv(const RunReport& report) {
  std::string out(kCsvHeader);
  out.push_back('\n');
  for (const SnapshotRow& row : report.rows) {
    out += format_fixed(row.time_s);
    out.push_back(',');
    out += std::to_string(row.node);
    out.push_back(',');
    out += role_name(row.role);
    out.push_back(',');
    out += std::to_string(row.counters.cpu);
    out.push_back(',');
    out += std::to_string(row.counters.lpm);
    out.push_back(',');
    out += std::to_string(row.counters.tx);
    out.push_back(',');
    out += std::to_string(row.counters.rx);
    out.push_back(',');
    out += format_fixed(row.interval_energy_mj);
    out.push_back(',');
    out += format_fixed(row.cumulative_energy_mj);
    out.push_back(',');
    out += verdict_state_name(row.verdict);
    out.push_back(',');
    out += format_fixed(row.suspicion_p);
    out.push_back('\n');
  }
  return out;
}

std::string verdicts_csv(const RunReport& report) {
  std::string out = "time_s,node_id,state,p,victims\n";
  for (const VerdictEvent& event : report.verdicts) {
    out += format_fixed(event.time_s);
    out.push_back(',');
    out += std::to_string(event.node);
    out.push_back(',');
    out += verdict_state_name(event.state);
    out.push_back(',');
    out += format_fixed(event.p);
    out.push_back(',');
    for (std::size_t i = 0; i < event.victims.size(); ++i) {
      if (i > 0) out.push_back('|');
      out += std::to_string(event.victims[i]);
    }
    out.push_back('\n');
  }
  return out;
}

std::string summary_json(const RunReport& report) {
  nlohmann::json root;
  root["scenario"] = report.config.name;
  root["condition"] = report.condition;
  root["seed"] = report.config.seed;
  root["duration_s"] = report.config.duration_s;
  root["events_processed"] = report.events_processed;
  root["network_total_mj"] = report.energy.network_total_mj;
  nlohmann::json nodes = nlohmann::json::array();
  for (const NodeEnergy& node : report.energy.per_node) {
    nlohmann::json entry;
    entry["node"] = node.node;
    entry["total_mj"] = node.total_mj;
    entry["lifetime_hours"] = report.lifetime_hours.at(node.node);
    nodes.push_back(entry);
  }
  root["per_node"] = nodes;
  if (report.escalated_at_s) root["escalated_at_s"] = *report.escalated_at_s;
  root["verdict_events"] = report.verdicts.size();
  return root.dump(2) + "\n";
}

std::vector<SnapshotRow> parse_run_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError("csv: empty document");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) {
    throw ValidationError("csv: bad header row");
  }

  std::vector<SnapshotRow> rows;
  std::map<NodeId, double> last_time;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line, ',');
    if (fields.size() != 11) {
      throw ValidationError("csv: line " + std::to_string(line_no) + ": expected 11 columns, got " +
                            std::to_string(fields.size()));
    }
    SnapshotRow row;
    row.time_s = parse_double(fields[0], "time_s");
    row.node = static_cast<NodeId>(parse_u64(fields[1], "node_id"));
    row.role = role_from_name(fields[2]);
    row.counters.cpu = parse_u64(fields[3], "cpu_ticks");
    row.counters.lpm = parse_u64(fields[4], "lpm_ticks");
    row.counters.tx = parse_u64(fields[5], "tx_ticks");
    row.counters.rx = parse_u64(fields[6], "rx_ticks");
    row.interval_energy_mj = parse_double(fields[7], "interval_energy_mj");
    row.cumulative_energy_mj = parse_double(fields[8], "cumulative_energy_mj");
    row.verdict = verdict_from_name(fields[9]);
    row.suspicion_p = parse_double(fields[10], "suspicion_p");

    auto [it, inserted] = last_time.try_emplace(row.node, row.time_s);
    if (!inserted) {
      if (row.time_s <= it->second) {
        throw ValidationError("csv: line " + std::to_string(line_no) + ": time_s not monotone for node " +
                              std::to_string(row.node));
      }
      it->second = row.time_s;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string comparison_csv(const ComparisonSummary& summary) {
  std::string out = "condition,node_id,total_mj\n";
  for (const EnergyReport& report : summary.reports) {
    for (const NodeEnergy& node : report.per_node) {
      out += report.condition + "," + std::to_string(node.node) + "," +
             format_fixed(node.total_mj) + "\n";
    }
    out += report.condition + ",network," + format_fixed(report.network_total_mj) + "\n";
  }
  return out;
}

std::string comparison_svg(const ComparisonSummary& summary) {
  static const char* kColors[] = {"#4477aa", "#ee6677", "#228833", "#ccbb44"};
  const std::size_t conditions = summary.reports.size();
  const std::size_t groups = summary.reports.empty() ? 0 : summary.reports[0].per_node.size();

  const double bar_w = 18.0;
  const double group_gap = 14.0;
  const double margin_left = 70.0;
  const double margin_bottom = 56.0;
  const double margin_top = 40.0;
  const double plot_h = 260.0;
  const double group_w = bar_w * static_cast<double>(conditions) + group_gap;
  const double width = margin_left + group_w * static_cast<double>(groups) + 170.0;
  const double height = margin_top + plot_h + margin_bottom;

  double max_mj = 0.0;
  for (const EnergyReport& report : summary.reports) {
    for (const NodeEnergy& node : report.per_node) {
      max_mj = std::max(max_mj, node.total_mj);
    }
  }
  if (max_mj <= 0.0) max_mj = 1.0;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_fixed(width, 0) +
         "\" height=\"" + format_fixed(height, 0) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + format_fixed(margin_left, 0) + "\" y=\"22\" font-family=\"sans-serif\" "
         "font-size=\"14\">Per-node energy by condition (mJ)</text>\n";

  // Axes
  const double base_y = margin_top + plot_h;
  svg += "<line x1=\"" + format_fixed(margin_left, 1) + "\" y1=\"" + format_fixed(margin_top, 1) +
         "\" x2=\"" + format_fixed(margin_left, 1) + "\" y2=\"" + format_fixed(base_y, 1) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + format_fixed(margin_left, 1) + "\" y1=\"" + format_fixed(base_y, 1) +
         "\" x2=\"" + format_fixed(width - 150.0, 1) + "\" y2=\"" + format_fixed(base_y, 1) +
         "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double value = max_mj * i / 4.0;
    const double y = base_y - plot_h * i / 4.0;
    svg += "<text x=\"" + format_fixed(margin_left - 8.0, 1) + "\" y=\"" + format_fixed(y + 4.0, 1) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           format_fixed(value, 1) + "</text>\n";
    svg += "<line x1=\"" + format_fixed(margin_left - 4.0, 1) + "\" y1=\"" + format_fixed(y, 1) +
           "\" x2=\"" + format_fixed(margin_left, 1) + "\" y2=\"" + format_fixed(y, 1) +
           "\" stroke=\"black\"/>\n";
  }

  for (std::size_t g = 0; g < groups; ++g) {
    const double group_x = margin_left + group_gap / 2.0 + group_w * static_cast<double>(g);
    for (std::size_t c = 0; c < conditions; ++c) {
      const NodeEnergy& node = summary.reports[c].per_node[g];
      const double h = plot_h * node.total_mj / max_mj;
      const double x = group_x + bar_w * static_cast<double>(c);
      svg += "<rect x=\"" + format_fixed(x, 1) + "\" y=\"" + format_fixed(base_y - h, 1) +
             "\" width=\"" + format_fixed(bar_w - 2.0, 1) + "\" height=\"" + format_fixed(h, 1) +
             "\" fill=\"" + kColors[c % 4] + "\"/>\n";
    }
    svg += "<text x=\"" + format_fixed(group_x + bar_w * conditions / 2.0, 1) + "\" y=\"" +
           format_fixed(base_y + 16.0, 1) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">node " +
           std::to_string(summary.reports[0].per_node[g].node) + "</text>\n";
  }

  for (std::size_t c = 0; c < conditions; ++c) {
    const double y = margin_top + 18.0 * static_cast<double>(c);
    svg += "<rect x=\"" + format_fixed(width - 140.0, 1) + "\" y=\"" + format_fixed(y, 1) +
           "\" width=\"12\" height=\"12\" fill=\"" + kColors[c % 4] + "\"/>\n";
    svg += "<text x=\"" + format_fixed(width - 122.0, 1) + "\" y=\"" + format_fixed(y + 10.0, 1) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + summary.reports[c].condition +
           "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace motesim

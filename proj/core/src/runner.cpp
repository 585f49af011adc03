#include "motesim/runner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "motesim/errors.hpp"

namespace motesim {

namespace {

std::string sanitize(const std::string& label) {
  std::string out;
  for (char c : label) {
    out.push_back(c == '+' ? '-' : c);
  }
  return out;
}

std::string run_basename(const RunReport& report) {
  return report.config.name + "_" + sanitize(report.condition) + "_seed" +
         std::to_string(report.config.seed);
}

std::vector<std::string> write_run_files(const RunReport& report, const std::string& out_dir,
                                         const std::string& basename) {
  std::vector<std::string> written;
  const std::string csv_path = out_dir + "/" + basename + ".csv";
  write_file(csv_path, run_csv(report));
  written.push_back(csv_path);
  const std::string verdicts_path = out_dir + "/" + basename + "_verdicts.csv";
  write_file(verdicts_path, verdicts_csv(report));
  written.push_back(verdicts_path);
  const std::string summary_path = out_dir + "/" + basename + "_summary.json";
  write_file(summary_path, summary_json(report));
  written.push_back(summary_path);
  return written;
}

}  // namespace

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path fs_path(path);
  if (fs_path.has_parent_path()) {
    std::filesystem::create_directories(fs_path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunOutput run_and_write(const ScenarioConfig& config, const std::string& out_dir) {
  RunOutput output;
  output.report = run_scenario(config);
  output.written = write_run_files(output.report, out_dir, run_basename(output.report));
  return output;
}

SweepOutput run_sweep(const ScenarioConfig& config, const std::vector<int>& counts,
                      const std::string& out_dir) {
  if (counts.empty()) throw ValidationError("sweep: at least one node count required");
  std::vector<int> ordered = counts;
  std::sort(ordered.begin(), ordered.end());

  SweepOutput output;
  for (int count : ordered) {
    ScenarioConfig truncated = truncate_nodes(config, count);
    RunReport report = run_scenario(truncated);
    const std::string basename = config.name + "_n" + std::to_string(count) + "_" +
                                 sanitize(report.condition) + "_seed" +
                                 std::to_string(config.seed);
    auto written = write_run_files(report, out_dir, basename);
    output.written.insert(output.written.end(), written.begin(), written.end());
    output.totals.emplace_back(count, report.energy.network_total_mj);
    output.reports.push_back(std::move(report));
  }

  std::string series = "node_count,network_total_mj\n";
  for (const auto& [count, total] : output.totals) {
    series += std::to_string(count) + "," + format_fixed(total) + "\n";
  }
  const std::string series_path =
      out_dir + "/" + config.name + "_sweep_seed" + std::to_string(config.seed) + ".csv";
  write_file(series_path, series);
  output.written.push_back(series_path);
  return output;
}

CompareOutput run_compare(const ScenarioConfig& config, std::vector<Condition> conditions,
                          const std::string& out_dir, bool emit_svg) {
  if (conditions.size() < 2) {
    throw ValidationError("conditions: need at least two to compare");
  }
  std::set<Condition> seen;
  for (Condition c : conditions) {
    if (!seen.insert(c).second) {
      throw ValidationError(std::string("conditions: duplicate '") + condition_name(c) + "'");
    }
  }
  std::sort(conditions.begin(), conditions.end());  // deterministic report order

  CompareOutput output;
  std::vector<EnergyReport> energies;
  for (Condition condition : conditions) {
    ScenarioConfig adjusted = apply_condition(config, condition);
    RunReport report = run_scenario(adjusted);
    auto written = write_run_files(report, out_dir, run_basename(report));
    output.written.insert(output.written.end(), written.begin(), written.end());
    energies.push_back(report.energy);
    output.reports.push_back(std::move(report));
  }
  output.summary = compare_conditions(energies);

  const std::string comparison_path =
      out_dir + "/" + config.name + "_comparison_seed" + std::to_string(config.seed) + ".csv";
  write_file(comparison_path, comparison_csv(output.summary));
  output.written.push_back(comparison_path);

  if (emit_svg) {
    const std::string svg_path =
        out_dir + "/" + config.name + "_chart_seed" + std::to_string(config.seed) + ".svg";
    write_file(svg_path, comparison_svg(output.summary));
    output.written.push_back(svg_path);
  }
  return output;
}

CsvSummary summarize_csv(const std::string& csv_text, const BatteryModel& battery) {
  const std::vector<SnapshotRow> rows = parse_run_csv(csv_text);
  if (rows.empty()) throw ValidationError("csv: no data rows");

  CsvSummary summary;
  std::map<NodeId, double> totals;
  for (const SnapshotRow& row : rows) {
    totals[row.node] = row.cumulative_energy_mj;  // rows are time-ordered per node
    summary.duration_s = std::max(summary.duration_s, row.time_s);
  }
  for (const auto& [node, total] : totals) {
    summary.per_node.push_back(NodeEnergy{node, total});
    summary.network_total_mj += total;
    if (summary.duration_s > 0 && total > 0) {
      summary.lifetime_hours[node] =
          estimate_lifetime_hours(total / summary.duration_s, battery);
    }
  }
  return summary;
}

}  // namespace motesim

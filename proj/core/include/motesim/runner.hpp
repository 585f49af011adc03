#pragma once

#include <string>
#include <vector>

#include "motesim/report.hpp"
#include "motesim/scenario.hpp"
#include "motesim/simulation.hpp"

namespace motesim {

// Orchestration behind the CLI subcommands. All outputs are deterministic
// functions of (scenario, seed); file names never embed wall-clock state.

struct RunOutput {
  RunReport report;
  std::vector<std::string> written;  // paths, in emission order
};

RunOutput run_and_write(const ScenarioConfig& config, const std::string& out_dir);

struct SweepOutput {
  std::vector<RunReport> reports;                 // one per count, ascending
  std::vector<std::pair<int, double>> totals;     // (node count, network mJ)
  std::vector<std::string> written;
};

SweepOutput run_sweep(const ScenarioConfig& config, const std::vector<int>& counts,
                      const std::string& out_dir);

struct CompareOutput {
  std::vector<RunReport> reports;  // condition order: baseline, attack, attack+ids, baseline+ids
  ComparisonSummary summary;
  std::vector<std::string> written;
};

CompareOutput run_compare(const ScenarioConfig& config, std::vector<Condition> conditions,
                          const std::string& out_dir, bool emit_svg);

struct CsvSummary {
  double duration_s = 0.0;
  std::vector<NodeEnergy> per_node;
  double network_total_mj = 0.0;
  std::map<NodeId, double> lifetime_hours;
};

// Re-parses an emitted run CSV (validating the schema on the way) and
// recomputes totals and battery-life projections.
CsvSummary summarize_csv(const std::string& csv_text, const BatteryModel& battery);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace motesim

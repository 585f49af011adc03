#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motesim/energy.hpp"
#include "motesim/ids.hpp"
#include "motesim/mote.hpp"
#include "motesim/scenario.hpp"

namespace motesim {

// One powertrace snapshot line. Column order matches the CSV schema.
struct SnapshotRow {
  double time_s = 0.0;
  NodeId node = 0;
  Role role = Role::normal;
  PowertraceCounters counters;  // cumulative
  double interval_energy_mj = 0.0;
  double cumulative_energy_mj = 0.0;
  VerdictState verdict = VerdictState::clean;
  double suspicion_p = 0.0;
};

struct VerdictEvent {
  double time_s = 0.0;
  NodeId node = 0;
  VerdictState state = VerdictState::clean;
  double p = 0.0;
  std::vector<NodeId> victims;
};

struct RunReport {
  ScenarioConfig config;         // validated scenario the run executed
  std::string condition;         // baseline | attack | attack+ids | baseline+ids
  std::vector<SnapshotRow> rows; // node-major within each snapshot time
  std::vector<VerdictEvent> verdicts;
  EnergyReport energy;
  std::map<NodeId, double> lifetime_hours;
  std::uint64_t events_processed = 0;
  std::optional<double> escalated_at_s;
};

// CSV with the fixed column set
//   time_s,node_id,role,cpu_ticks,lpm_ticks,tx_ticks,rx_ticks,
//   interval_energy_mj,cumulative_energy_mj,verdict_state,suspicion_p
// Floats carry six decimals; rows are newline-terminated.
std::string run_csv(const RunReport& report);
std::string verdicts_csv(const RunReport& report);
std::string summary_json(const RunReport& report);

// Parses and validates a run CSV (column count, types, per-node monotone
// time). Throws ValidationError on any schema violation.
std::vector<SnapshotRow> parse_run_csv(const std::string& text);

// Grouped bar chart (one group per node, one bar per condition).
std::string comparison_svg(const ComparisonSummary& summary);
std::string comparison_csv(const ComparisonSummary& summary);

std::string format_fixed(double value, int decimals = 6);

}  // namespace motesim

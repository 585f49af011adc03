#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motesim/kernel.hpp"

namespace motesim {

struct PowertraceCounters;  // mote.hpp

// Current draws (mA) per radio/MCU state and the tick rate they apply to.
// The defaults are the standard Zolertia-Z1/CC2420 accounting constants.
struct EnergyCoefficients {
  double cpu_ma = 0.5;
  double lpm_ma = 0.0005;
  double tx_ma = 17.4;
  double rx_ma = 18.8;
  double volts = 3.0;
  std::uint64_t ticks_per_s = 32768;

  void validate() const;
  bool operator==(const EnergyCoefficients&) const = default;
};

// Millijoules consumed by the given cumulative state times:
//   (cpu*cpu_ma + lpm*lpm_ma + tx*tx_ma + rx*rx_ma) / ticks_per_s * volts
double energy_mj(const PowertraceCounters& counters, const EnergyCoefficients& coeffs);

struct BatteryModel {
  double capacity_mah = 2200.0;  // two AA cells
  double voltage = 3.0;

  void validate() const;
  bool operator==(const BatteryModel&) const = default;
};

// Battery energy over average draw: (capacity_mAh * voltage) / avg_power_mW
// hours. Zero or negative power is an error, not an infinite lifetime.
double estimate_lifetime_hours(double avg_power_mw, const BatteryModel& battery);

struct NodeEnergy {
  NodeId node = 0;
  double total_mj = 0.0;
};

struct EnergyReport {
  std::string condition;        // baseline | attack | attack+ids | baseline+ids
  std::uint64_t seed = 0;
  double duration_s = 0.0;
  std::string topology_digest;  // sorted (id, x, y) fingerprint
  std::vector<NodeEnergy> per_node;  // sorted by node id
  double network_total_mj = 0.0;
};

struct ConditionDelta {
  std::string from;
  std::string to;
  double network_delta_mj = 0.0;
  std::vector<NodeEnergy> per_node_delta;
};

struct ComparisonSummary {
  std::vector<EnergyReport> reports;       // as given
  std::vector<ConditionDelta> deltas;      // consecutive pairs in given order
  std::vector<std::string> ordering;       // condition labels, ascending total
};

// Requires >= 2 reports over identical topology, seed and duration;
// otherwise throws ComparisonError.
ComparisonSummary compare_conditions(const std::vector<EnergyReport>& reports);

}  // namespace motesim

#include "motesim/energy.hpp"

#include <algorithm>
#include <cmath>

#include "motesim/errors.hpp"
#include "motesim/mote.hpp"

namespace motesim {

void EnergyCoefficients::validate() const {
  if (cpu_ma <= 0 || lpm_ma <= 0 || tx_ma <= 0 || rx_ma <= 0 || volts <= 0 || ticks_per_s == 0) {
    throw ValidationError("energy: all coefficients must be positive");
  }
}

double energy_mj(const PowertraceCounters& c, const EnergyCoefficients& k) {
  const double milliamp_ticks = static_cast<double>(c.cpu) * k.cpu_ma +
                                static_cast<double>(c.lpm) * k.lpm_ma +
                                static_cast<double>(c.tx) * k.tx_ma +
                                static_cast<double>(c.rx) * k.rx_ma;
  return milliamp_ticks / static_cast<double>(k.ticks_per_s) * k.volts;
}

void BatteryModel::validate() const {
  if (capacity_mah <= 0) throw ValidationError("battery: capacity must be positive");
  if (voltage <= 0) throw ValidationError("battery: voltage must be positive");
}

double estimate_lifetime_hours(double avg_power_mw, const BatteryModel& battery) {
  if (!(avg_power_mw > 0.0)) {
    throw DomainError("lifetime is undefined for zero average power");
  }
  // mAh * V = mWh; mWh / mW = h
  return battery.capacity_mah * battery.voltage / avg_power_mw;
}

ComparisonSummary compare_conditions(const std::vector<EnergyReport>& reports) {
  if (reports.size() < 2) {
    throw ComparisonError("need at least two reports to compare");
  }
  const EnergyReport& first = reports.front();
  for (const EnergyReport& r : reports) {
    if (r.topology_digest != first.topology_digest) {
      throw ComparisonError("reports cover different topologies ('" + r.condition + "' vs '" +
                            first.condition + "')");
    }
    if (r.seed != first.seed) {
      throw ComparisonError("reports use different seeds");
    }
    if (r.duration_s != first.duration_s) {
      throw ComparisonError("reports cover different durations");
    }
    if (r.per_node.size() != first.per_node.size()) {
      throw ComparisonError("reports cover different node counts");
    }
  }

  ComparisonSummary summary;
  summary.reports = reports;
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const EnergyReport& a = reports[i - 1];
    const EnergyReport& b = reports[i];
    ConditionDelta delta;
    delta.from = a.condition;
    delta.to = b.condition;
    delta.network_delta_mj = b.network_total_mj - a.network_total_mj;
    for (std::size_t n = 0; n < a.per_node.size(); ++n) {
      if (a.per_node[n].node != b.per_node[n].node) {
        throw ComparisonError("reports cover different node sets");
      }
      delta.per_node_delta.push_back(
          NodeEnergy{a.per_node[n].node, b.per_node[n].total_mj - a.per_node[n].total_mj});
    }
    summary.deltas.push_back(std::move(delta));
  }

  std::vector<const EnergyReport*> sorted;
  for (const auto& r : reports) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    return a->network_total_mj < b->network_total_mj;
  });
  for (const auto* r : sorted) summary.ordering.push_back(r->condition);
  return summary;
}

}  // namespace motesim

#include "motesim/radio.hpp"

#include <cmath>

#include "motesim/errors.hpp"

namespace motesim {

double geometric_distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void EnvironmentProfile::validate() const {
  if (path_loss_exponent < 1.5 || path_loss_exponent > 6.0) {
    throw ValidationError("environment '" + name + "': path_loss_exponent must be in [1.5, 6.0]");
  }
  if (shadowing_sigma_db < 0.0) {
    throw ValidationError("environment '" + name + "': shadowing_sigma must be >= 0");
  }
  if (retransmission_bias < 0.0 || retransmission_bias >= 1.0) {
    throw ValidationError("environment '" + name + "': retransmission_bias must be in [0, 1)");
  }
}

EnvironmentProfile lab_profile() {
  return EnvironmentProfile{"lab", 2.0, 55.0, 2.0, -100.0, 0.05};
}

EnvironmentProfile auditorium_profile() {
  return EnvironmentProfile{"auditorium", 2.2, 55.0, 3.0, -100.0, 0.10};
}

EnvironmentProfile basketball_court_profile() {
  return EnvironmentProfile{"basketball-court", 2.4, 55.0, 3.5, -100.0, 0.12};
}

EnvironmentProfile parking_lot_profile() {
  return EnvironmentProfile{"parking-lot", 2.8, 55.0, 4.0, -100.0, 0.20};
}

const std::vector<EnvironmentProfile>& environment_presets() {
  static const std::vector<EnvironmentProfile> presets = {
      lab_profile(), auditorium_profile(), basketball_court_profile(), parking_lot_profile()};
  return presets;
}

EnvironmentProfile environment_preset(const std::string& name) {
  for (const auto& preset : environment_presets()) {
    if (preset.name == name) return preset;
  }
  throw ValidationError("unknown environment preset '" + name + "'");
}

void RadioSpec::validate() const {
  if (!(rx_sensitivity_dbm < tx_power_dbm)) {
    throw ValidationError("radio: rx_sensitivity must be below tx_power");
  }
}

double mean_rssi_at(const RadioSpec& spec, double distance_m, const EnvironmentProfile& env) {
  if (distance_m <= 0.0) {
    throw DomainError("rssi is undefined for distance <= 0");
  }
  // d0 = 1 m
  return spec.tx_power_dbm -
         (env.reference_loss_db + 10.0 * env.path_loss_exponent * std::log10(distance_m));
}

double rssi_at(const RadioSpec& spec, double distance_m, const EnvironmentProfile& env,
               RngStream& rng) {
  const double mean = mean_rssi_at(spec, distance_m, env);
  if (env.shadowing_sigma_db <= 0.0) return mean;
  return mean + rng.normal(0.0, env.shadowing_sigma_db);
}

double estimate_distance(const RadioSpec& spec, double rssi_dbm, const EnvironmentProfile& env) {
  const double exponent =
      (spec.tx_power_dbm - env.reference_loss_db - rssi_dbm) / (10.0 * env.path_loss_exponent);
  return std::pow(10.0, exponent);
}

double max_range_m(const RadioSpec& spec, const EnvironmentProfile& env) {
  return estimate_distance(spec, spec.rx_sensitivity_dbm, env);
}

bool link_delivered(const RadioSpec& spec, double rssi_dbm) {
  return rssi_dbm >= spec.rx_sensitivity_dbm;
}

int draw_retransmissions(const EnvironmentProfile& env, RngStream& rng) {
  return rng.geometric(env.retransmission_bias);
}

Delivery deliver(const RadioSpec& spec, double rssi_dbm, const EnvironmentProfile& env,
                 RngStream& rng) {
  Delivery result;
  result.delivered = link_delivered(spec, rssi_dbm);
  if (result.delivered) {
    result.retransmissions = draw_retransmissions(env, rng);
  }
  return result;
}

}  // namespace motesim

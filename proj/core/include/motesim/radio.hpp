#pragma once

#include <string>
#include <vector>

#include "motesim/rng.hpp"

namespace motesim {

struct Position {
  double x = 0.0;  // meters
  double y = 0.0;  // meters
  bool operator==(const Position&) const = default;
};

inline constexpr double kMetersPerFoot = 0.3048;

// Euclidean distance in meters.
double geometric_distance(const Position& a, const Position& b);

// Path-loss and interference parameters for one operating environment.
// Interference shows up as extra retransmissions rather than bit errors.
struct EnvironmentProfile {
  std::string name;
  double path_loss_exponent = 2.0;   // n
  double reference_loss_db = 55.0;   // PL0 at d0 = 1 m
  double shadowing_sigma_db = 0.0;
  double noise_floor_dbm = -100.0;
  double retransmission_bias = 0.0;  // per-frame extra-retransmit probability

  void validate() const;
};

EnvironmentProfile lab_profile();
EnvironmentProfile auditorium_profile();
EnvironmentProfile basketball_court_profile();
EnvironmentProfile parking_lot_profile();

const std::vector<EnvironmentProfile>& environment_presets();
// Throws ValidationError for an unknown preset name.
EnvironmentProfile environment_preset(const std::string& name);

struct RadioSpec {
  double tx_power_dbm = 0.0;         // CC2420-class defaults
  double rx_sensitivity_dbm = -90.0;

  void validate() const;
};

// Mean received power under the log-distance model (no shadowing).
double mean_rssi_at(const RadioSpec& spec, double distance_m, const EnvironmentProfile& env);

// Received power including a Gaussian shadowing draw from rng.
// Throws DomainError for distance <= 0.
double rssi_at(const RadioSpec& spec, double distance_m, const EnvironmentProfile& env,
               RngStream& rng);

// Inverts the mean path-loss model; strictly decreasing in rssi.
double estimate_distance(const RadioSpec& spec, double rssi_dbm, const EnvironmentProfile& env);

// Distance at which the mean RSSI equals the receive sensitivity.
double max_range_m(const RadioSpec& spec, const EnvironmentProfile& env);

bool link_delivered(const RadioSpec& spec, double rssi_dbm);

// Retransmission count for one frame; geometric in the environment bias.
int draw_retransmissions(const EnvironmentProfile& env, RngStream& rng);

struct Delivery {
  bool delivered = false;
  int retransmissions = 0;
};

// Delivery decision for one link plus the retransmission draw charged to
// the sender. Not-delivered frames never retransmit.
Delivery deliver(const RadioSpec& spec, double rssi_dbm, const EnvironmentProfile& env,
                 RngStream& rng);

}  // namespace motesim

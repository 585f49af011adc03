#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motesim/attack.hpp"
#include "motesim/energy.hpp"
#include "motesim/ids.hpp"
#include "motesim/mote.hpp"
#include "motesim/radio.hpp"

namespace motesim {

enum class TrafficMode { broadcast, unicast };

const char* traffic_mode_name(TrafficMode mode);

struct TrafficConfig {
  TrafficMode mode = TrafficMode::broadcast;
  double period_s = 4.0;
  double jitter_s = 2.0;
  // Unicast pairing; empty means each node sends to the next id in ring order.
  std::map<NodeId, NodeId> peers;
};

struct BeaconConfig {
  bool enabled = true;
  double period_s = 2.5;
  double jitter_s = 0.25;
};

struct NodeEntry {
  NodeId id = 0;
  Position position;
  bool silent = false;  // receive-only node
};

// Full experiment description. Lengths are stored in meters; the JSON form
// requires explicit unit suffixes ("5 ft", "1.524 m") to keep unit errors
// out of scenario files.
struct ScenarioConfig {
  std::string name = "scenario";
  double duration_s = 600.0;
  std::uint64_t seed = 1;
  std::vector<NodeEntry> nodes;  // traffic nodes in deployment order
  NodeId anchor_id = 0;
  Position anchor_position;
  std::optional<NodeId> border_router;
  TrafficConfig traffic;
  BeaconConfig beacon;
  EnvironmentProfile environment = lab_profile();
  RadioSpec radio;
  AttackConfig attack;
  IdsConfig ids;
  double powertrace_interval_s = 10.0;
  BatteryModel battery;
  EnergyCoefficients energy;

  void validate() const;

  std::vector<Position> deployment_positions() const;  // nodes plus anchor
  bool has_node(NodeId id) const;
  // Configured attacker, or the node nearest the deployment centroid.
  NodeId resolved_attacker() const;
  std::map<NodeId, NodeId> resolved_peers() const;  // ring order when unset
};

ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::string& path);
std::string serialize_scenario(const ScenarioConfig& config);

// Canonical bundled scenarios (also shipped under scenarios/).
ScenarioConfig paper_grid_scenario();
ScenarioConfig wormhole_cluster_scenario();
ScenarioConfig sybil_line_scenario();

// Experiment conditions derived from one scenario.
enum class Condition { baseline, attack, attack_ids, baseline_ids };

const char* condition_name(Condition condition);
Condition condition_from_name(const std::string& name);

// Rewrites the attack/ids blocks for the requested condition. Attack
// conditions require the scenario to configure an attack.
ScenarioConfig apply_condition(ScenarioConfig config, Condition condition);
std::string condition_label(const ScenarioConfig& config);

// Keeps the first `count` traffic nodes (the anchor always stays).
ScenarioConfig truncate_nodes(ScenarioConfig config, int count);

// "5 ft" -> 1.524; "2 m" -> 2.0. A missing unit is a ValidationError.
double parse_length_m(const std::string& text);
std::string format_length_m(double meters);

// Fingerprint of the deployed node set, used to reject cross-topology
// comparisons.
std::string topology_digest(const ScenarioConfig& config);

}  // namespace motesim

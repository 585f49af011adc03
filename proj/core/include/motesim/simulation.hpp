#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "motesim/ids.hpp"
#include "motesim/kernel.hpp"
#include "motesim/mote.hpp"
#include "motesim/report.hpp"
#include "motesim/rng.hpp"
#include "motesim/scenario.hpp"

namespace motesim {

// Executes one scenario on the event kernel: traffic apps, beacons, attack
// behaviors, the anchor detector and powertrace snapshots. A run is a pure
// function of (config, seed); replays are byte-identical.
class Simulation {
 public:
  explicit Simulation(ScenarioConfig config);

  RunReport run();

  // Post-run access for tests.
  const Mote& mote(NodeId id) const;
  const Kernel& kernel() const { return kernel_; }
  const AnchorIds* detector() const { return detector_.get(); }
  const std::vector<std::pair<NodeId, Position>>& sybil_identities() const {
    return sybil_identities_;
  }

 private:
  struct NodeState {
    Mote mote;
    RngStream shadow;
    RngStream jitter;
    RngStream attack;
    RngStream link;
    Tick next_app_nominal = 0;
    bool runs_app = true;
  };

  NodeState& state(NodeId id);
  RngStream make_stream(NodeId id, RngPurpose purpose) const;

  void setup();
  void schedule_app_send(NodeId id);
  void schedule_beacon(NodeId id);
  void schedule_flood(NodeId id, Tick at);
  void schedule_ids_round(Tick at);
  void schedule_snapshot(Tick at);

  void send_app(NodeId id);
  void send_beacon(NodeId id);
  void send_flood(NodeId id);

  // Radiates one frame from `physical` (the true emitter, which may differ
  // from msg.src for sybil identities and tunnel exits).
  void transmit(NodeId physical, Message msg);
  void take_snapshot();
  void run_ids_round();

  std::vector<NeighborDigestEntry> build_digest(const Mote& sender) const;

  ScenarioConfig config_;
  Kernel kernel_;
  std::map<NodeId, NodeState> nodes_;
  std::vector<NodeId> node_order_;  // traffic nodes then anchor, ascending id
  std::map<NodeId, NodeId> peers_;
  std::optional<NodeId> flooder_;
  std::optional<Position> flood_claim_;
  std::vector<std::pair<NodeId, Position>> sybil_identities_;  // fake id -> forged claim
  std::optional<WormholeConfig> wormhole_;
  std::unique_ptr<AnchorIds> detector_;
  Blacklist blacklist_;
  std::map<NodeId, std::vector<NeighborDigestEntry>> anchor_digests_;
  Tick duration_ticks_ = 0;
  Tick beacon_period_ticks_ = 0;
  std::map<NodeId, PowertraceCounters> previous_snapshot_;
  RunReport report_;
  bool ran_ = false;
};

// Convenience wrapper: validate, run, report.
RunReport run_scenario(const ScenarioConfig& config);

}  // namespace motesim

#include "motesim/simulation.hpp"

#include <algorithm>
#include <cmath>

#include "motesim/errors.hpp"

namespace motesim {

namespace {

Tick at_least_one(Tick ticks) {
  return ticks == 0 ? 1 : ticks;
}

}  // namespace

Simulation::Simulation(ScenarioConfig config) : config_(std::move(config)) {
  config_.validate();
}

RngStream Simulation::make_stream(NodeId id, RngPurpose purpose) const {
  return RngStream(config_.seed, static_cast<std::uint64_t>(id), purpose);
}

Simulation::NodeState& Simulation::state(NodeId id) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    throw InvariantError("unknown node " + std::to_string(id));
  }
  return it->second;
}

const Mote& Simulation::mote(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    throw InvariantError("unknown node " + std::to_string(id));
  }
  return it->second.mote;
}

void Simulation::setup() {
  duration_ticks_ = at_least_one(ticks_from_seconds(config_.duration_s));
  beacon_period_ticks_ = at_least_one(ticks_from_seconds(config_.beacon.period_s));

  std::vector<NodeId> attackers;
  switch (config_.attack.kind) {
    case AttackKind::none:
      break;
    case AttackKind::wormhole:
      wormhole_ = config_.attack.wormhole;
      attackers = {wormhole_->endpoint_a, wormhole_->endpoint_b};
      break;
    case AttackKind::sybil:
      attackers = {config_.resolved_attacker()};
      break;
    case AttackKind::flooding:
      flooder_ = config_.resolved_attacker();
      attackers = {*flooder_};
      break;
  }

  const auto add_node = [&](NodeId id, Position pos, Role role, bool silent) {
    MoteSpec spec;
    spec.id = id;
    spec.position = pos;
    spec.claimed_position = pos;
    spec.role = role;
    spec.transmits = !silent;
    NodeState node{Mote(spec, 0),
                   make_stream(id, RngPurpose::shadowing),
                   make_stream(id, RngPurpose::app_jitter),
                   make_stream(id, RngPurpose::attack),
                   make_stream(id, RngPurpose::link)};
    node.runs_app = !silent && role != Role::anchor;
    nodes_.emplace(id, std::move(node));
    node_order_.push_back(id);
  };

  for (const NodeEntry& entry : config_.nodes) {
    const bool is_attacker =
        std::find(attackers.begin(), attackers.end(), entry.id) != attackers.end();
    add_node(entry.id, entry.position, is_attacker ? Role::attacker : Role::normal,
             entry.silent);
  }
  add_node(config_.anchor_id, config_.anchor_position, Role::anchor, false);
  std::sort(node_order_.begin(), node_order_.end());

  if (config_.traffic.mode == TrafficMode::unicast) {
    peers_ = config_.resolved_peers();
  }

  if (flooder_) {
    NodeState& attacker = state(*flooder_);
    attacker.runs_app = false;  // the converted mote floods instead
    const double offset = config_.attack.flooding.claim_offset_m;
    flood_claim_ = Position{attacker.mote.spec().position.x + offset,
                            attacker.mote.spec().position.y + offset};
  }

  if (config_.attack.kind == AttackKind::sybil) {
    const NodeId attacker_id = config_.resolved_attacker();
    NodeId next_fake = config_.anchor_id;
    for (const NodeEntry& entry : config_.nodes) next_fake = std::max(next_fake, entry.id);
    ++next_fake;

    std::vector<Position> forged = config_.attack.sybil.forged_positions;
    if (forged.empty()) {
      RngStream& attack_stream = state(attacker_id).attack;
      forged = draw_forged_positions(bounding_box(config_.deployment_positions()),
                                     config_.attack.sybil.fake_count, attack_stream);
    }
    for (const Position& pos : forged) {
      sybil_identities_.emplace_back(next_fake++, pos);
    }
  }

  if (config_.ids.enabled) {
    detector_ = std::make_unique<AnchorIds>(config_.ids, config_.anchor_id,
                                            config_.anchor_position, config_.radio,
                                            config_.environment, config_.border_router);
  }

  // Fixed scheduling order pins the same-tick tie-break.
  for (NodeId id : node_order_) {
    NodeState& node = state(id);
    if (node.runs_app && (!flooder_ || id != *flooder_)) {
      node.next_app_nominal = 0;
      schedule_app_send(id);
    }
  }
  if (config_.beacon.enabled) {
    for (NodeId id : node_order_) {
      NodeState& node = state(id);
      if (!node.mote.spec().transmits) continue;
      if (flooder_ && id == *flooder_) continue;
      schedule_beacon(id);
    }
  }
  if (flooder_) {
    schedule_flood(*flooder_, at_least_one(ticks_from_seconds(config_.attack.flooding.period_s)));
  }
  if (detector_) {
    schedule_ids_round(detector_->round_period_ticks());
  }
  schedule_snapshot(at_least_one(ticks_from_seconds(config_.powertrace_interval_s)));
}

void Simulation::schedule_app_send(NodeId id) {
  NodeState& node = state(id);
  const Tick period = at_least_one(ticks_from_seconds(config_.traffic.period_s));
  node.next_app_nominal += period;
  if (node.next_app_nominal > duration_ticks_) return;

  const double jitter = config_.traffic.jitter_s;
  const std::int64_t offset =
      tick_offset_from_seconds(node.jitter.uniform(-jitter, jitter));
  const std::int64_t target = static_cast<std::int64_t>(node.next_app_nominal) + offset;
  const Tick fire = target < static_cast<std::int64_t>(kernel_.now())
                        ? kernel_.now()
                        : static_cast<Tick>(target);
  kernel_.schedule(fire, [this, id] { send_app(id); }, id);
}

void Simulation::schedule_beacon(NodeId id) {
  NodeState& node = state(id);
  const Tick period = beacon_period_ticks_;
  const double jitter = config_.beacon.jitter_s;
  const std::int64_t offset =
      tick_offset_from_seconds(node.jitter.uniform(-jitter, jitter));
  const std::int64_t target =
      static_cast<std::int64_t>(kernel_.now() + period) + offset;
  const Tick fire = target < static_cast<std::int64_t>(kernel_.now())
                        ? kernel_.now()
                        : static_cast<Tick>(target);
  if (fire > duration_ticks_) return;
  kernel_.schedule(fire, [this, id] { send_beacon(id); }, id);
}

void Simulation::schedule_flood(NodeId id, Tick at) {
  if (at > duration_ticks_) return;
  kernel_.schedule(at, [this, id] { send_flood(id); }, id);
}

void Simulation::schedule_ids_round(Tick at) {
  if (at > duration_ticks_) return;
  kernel_.schedule(at, [this] { run_ids_round(); });
}

void Simulation::schedule_snapshot(Tick at) {
  if (at > duration_ticks_) return;
  kernel_.schedule(at, [this] { take_snapshot(); });
}

void Simulation::send_app(NodeId id) {
  const NodeState& node = nodes_.at(id);
  Message msg;
  msg.src = id;
  msg.claimed_src_position = node.mote.spec().claimed_position;
  msg.sent_at = kernel_.now();
  if (config_.traffic.mode == TrafficMode::broadcast) {
    msg.kind = MessageKind::broadcast_app;
    msg.payload_bytes = kBroadcastPayloadBytes;
  } else {
    msg.kind = MessageKind::unicast_app;
    msg.payload_bytes = kUnicastPayloadBytes;
    msg.unicast_dest = peers_.at(id);
  }
  transmit(id, std::move(msg));
  schedule_app_send(id);
}

void Simulation::send_beacon(NodeId id) {
  const NodeState& node = nodes_.at(id);
  Message msg;
  msg.kind = MessageKind::beacon;
  msg.src = id;
  msg.claimed_src_position = node.mote.spec().claimed_position;
  msg.payload_bytes = kBeaconPayloadBytes;
  msg.sent_at = kernel_.now();
  msg.digest = build_digest(node.mote);
  transmit(id, std::move(msg));

  if (config_.attack.kind == AttackKind::sybil && id == config_.resolved_attacker()) {
    for (const auto& [fake_id, forged] : sybil_identities_) {
      Message fake;
      fake.kind = MessageKind::beacon;
      fake.src = fake_id;
      fake.claimed_src_position = forged;
      fake.payload_bytes = kBeaconPayloadBytes;
      fake.sent_at = kernel_.now();
      transmit(id, std::move(fake));
    }
  }
  schedule_beacon(id);
}

void Simulation::send_flood(NodeId id) {
  Message msg;
  msg.kind = MessageKind::broadcast_app;
  msg.src = id;
  msg.claimed_src_position = *flood_claim_;
  msg.payload_bytes = kFloodPayloadBytes;
  msg.sent_at = kernel_.now();
  transmit(id, std::move(msg));
  schedule_flood(id, kernel_.now() + at_least_one(ticks_from_seconds(
                                         config_.attack.flooding.period_s)));
}

std::vector<NeighborDigestEntry> Simulation::build_digest(const Mote& sender) const {
  std::vector<NeighborDigestEntry> digest;
  for (const auto& [id, record] : sender.neighbors()) {
    if (record.rssi.empty()) continue;
    digest.push_back(NeighborDigestEntry{id, median_dbm(record.rssi.samples())});
  }
  return digest;
}

void Simulation::transmit(NodeId physical, Message msg) {
  NodeState& sender = state(physical);
  if (!sender.mote.spec().transmits) return;

  const std::uint64_t airtime = frame_airtime_ticks(msg.payload_bytes);
  const int copies = 1 + draw_retransmissions(config_.environment, sender.link);
  sender.mote.charge_tx(airtime * static_cast<std::uint64_t>(copies));
  sender.mote.charge_cpu(kCpuTicksPerFrame);

  const Position origin = sender.mote.spec().position;
  const Tick now = kernel_.now();

  for (NodeId id : node_order_) {
    if (id == physical) continue;
    NodeState& receiver = state(id);
    double distance = geometric_distance(origin, receiver.mote.spec().position);
    if (distance < 1e-3) distance = 1e-3;
    const double rssi = rssi_at(config_.radio, distance, config_.environment, receiver.shadow);
    if (!link_delivered(config_.radio, rssi)) continue;

    const bool receiver_honest = receiver.mote.spec().role != Role::attacker;
    if (receiver_honest && blacklist_.drops(msg.src, now)) continue;

    const bool endpoint = wormhole_ && (id == wormhole_->endpoint_a || id == wormhole_->endpoint_b);
    const bool addressed_elsewhere = msg.unicast_dest && *msg.unicast_dest != id;
    const bool full_receive = !addressed_elsewhere || endpoint;

    if (!full_receive) {
      receiver.mote.charge_rx(overhear_ticks(airtime) * static_cast<std::uint64_t>(copies));
      continue;
    }

    receiver.mote.on_frame_received(msg, rssi, copies);

    if (id == config_.anchor_id && msg.kind == MessageKind::beacon) {
      anchor_digests_[msg.src] = msg.digest;
    }

    if (msg.unicast_dest && *msg.unicast_dest == id && !msg.tunneled) {
      // Link-layer ack, charged to both sides.
      receiver.mote.charge_tx(kAckAirtimeTicks);
      receiver.mote.charge_cpu(kCpuTicksPerFrame);
      const bool sender_honest = sender.mote.spec().role != Role::attacker;
      if (!(sender_honest && blacklist_.drops(id, now))) {
        sender.mote.charge_rx(kAckAirtimeTicks);
        sender.mote.charge_cpu(kCpuTicksPerFrame);
      }
    }

    if (endpoint && !msg.tunneled) {
      const NodeId exit =
          id == wormhole_->endpoint_a ? wormhole_->endpoint_b : wormhole_->endpoint_a;
      if (msg.src != exit) {
        Message replay = msg;
        replay.tunneled = true;
        kernel_.schedule(now + 1, [this, exit, replay] { transmit(exit, replay); }, exit);
      }
    }
  }
}

void Simulation::run_ids_round() {
  NodeState& anchor = state(config_.anchor_id);
  RoundOutcome outcome =
      detector_->run_round(anchor.mote.neighbors(), anchor_digests_, kernel_.now());
  anchor.mote.charge_cpu(outcome.cpu_ticks);
  anchor.mote.charge_rx(outcome.rx_ticks);

  for (const Verdict& transition : outcome.transitions) {
    VerdictEvent event;
    event.time_s = seconds_from_ticks(kernel_.now());
    event.node = transition.id;
    event.state = transition.state;
    event.p = transition.p;
    event.victims = transition.victims;
    report_.verdicts.push_back(std::move(event));

    if (transition.state == VerdictState::attacker) {
      blacklist_.apply(transition, kernel_.now() + beacon_period_ticks_);
    }
  }

  if (outcome.escalated_now) {
    report_.escalated_at_s = seconds_from_ticks(kernel_.now());
    Message probe;
    probe.kind = MessageKind::ids_probe;
    probe.src = config_.anchor_id;
    probe.claimed_src_position = config_.anchor_position;
    probe.payload_bytes = 20;
    probe.sent_at = kernel_.now();
    transmit(config_.anchor_id, std::move(probe));
  }

  schedule_ids_round(kernel_.now() + detector_->round_period_ticks());
}

void Simulation::take_snapshot() {
  const Tick now = kernel_.now();
  for (NodeId id : node_order_) {
    NodeState& node = state(id);
    const PowertraceCounters counters = node.mote.snapshot_powertrace(now);
    const PowertraceCounters interval = counters - previous_snapshot_[id];

    SnapshotRow row;
    row.time_s = seconds_from_ticks(now);
    row.node = id;
    row.role = node.mote.spec().role;
    row.counters = counters;
    row.interval_energy_mj = energy_mj(interval, config_.energy);
    row.cumulative_energy_mj = energy_mj(counters, config_.energy);
    if (detector_) {
      row.verdict = detector_->state_of(id);
      row.suspicion_p = detector_->suspicion_of(id);
    }
    report_.rows.push_back(row);
    previous_snapshot_[id] = counters;
  }
  schedule_snapshot(now + at_least_one(ticks_from_seconds(config_.powertrace_interval_s)));
}

RunReport Simulation::run() {
  if (ran_) throw InvariantError("simulation already ran; build a fresh instance");
  ran_ = true;

  report_ = RunReport{};
  report_.config = config_;
  report_.condition = condition_label(config_);

  setup();
  kernel_.run_until(duration_ticks_);

  report_.events_processed = kernel_.events_processed();

  EnergyReport energy;
  energy.condition = report_.condition;
  energy.seed = config_.seed;
  energy.duration_s = config_.duration_s;
  energy.topology_digest = topology_digest(config_);
  double network_total = 0.0;
  for (NodeId id : node_order_) {
    const PowertraceCounters counters = state(id).mote.snapshot_powertrace(duration_ticks_);
    const double total = energy_mj(counters, config_.energy);
    energy.per_node.push_back(NodeEnergy{id, total});
    network_total += total;

    const double avg_power_mw = total / config_.duration_s;
    report_.lifetime_hours[id] = estimate_lifetime_hours(avg_power_mw, config_.battery);
  }
  energy.network_total_mj = network_total;
  report_.energy = std::move(energy);
  return report_;
}

RunReport run_scenario(const ScenarioConfig& config) {
  Simulation sim(config);
  return sim.run();
}

}  // namespace motesim

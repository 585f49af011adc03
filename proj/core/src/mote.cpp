#include "motesim/mote.hpp"

#include "motesim/errors.hpp"

namespace motesim {

const char* role_name(Role role) {
  switch (role) {
    case Role::normal: return "normal";
    case Role::anchor: return "anchor";
    case Role::attacker: return "attacker";
  }
  return "unknown";
}

const char* message_kind_name(MessageKind kind) {
  switch (kind) {
    case MessageKind::beacon: return "beacon";
    case MessageKind::broadcast_app: return "broadcast_app";
    case MessageKind::unicast_app: return "unicast_app";
    case MessageKind::ids_probe: return "ids_probe";
  }
  return "unknown";
}

std::uint64_t frame_airtime_ticks(int payload_bytes) {
  if (payload_bytes < 1 || payload_bytes > kMaxPayloadBytes) {
    throw DomainError("payload length must be in [1, " + std::to_string(kMaxPayloadBytes) +
                      "] bytes");
  }
  const std::uint64_t bits =
      static_cast<std::uint64_t>(payload_bytes + kFrameOverheadBytes) * 8;
  // ceil(bits / rate * ticks_per_s)
  return (bits * kTicksPerSecond + kRadioBitsPerSecond - 1) / kRadioBitsPerSecond;
}

std::uint64_t overhear_ticks(std::uint64_t airtime) {
  return (airtime + kOverhearDivisor - 1) / kOverhearDivisor;
}

PowertraceCounters PowertraceCounters::operator+(const PowertraceCounters& o) const {
  return PowertraceCounters{cpu + o.cpu, lpm + o.lpm, tx + o.tx, rx + o.rx};
}

PowertraceCounters PowertraceCounters::operator-(const PowertraceCounters& o) const {
  if (cpu < o.cpu || lpm < o.lpm || tx < o.tx || rx < o.rx) {
    throw InvariantError("powertrace counters must be monotone non-decreasing");
  }
  return PowertraceCounters{cpu - o.cpu, lpm - o.lpm, tx - o.tx, rx - o.rx};
}

void RssiRing::push(double rssi_dbm) {
  if (samples_.size() == capacity_) {
    samples_.erase(samples_.begin());
  }
  samples_.push_back(rssi_dbm);
}

Mote::Mote(MoteSpec spec, Tick start_tick) : spec_(std::move(spec)), start_tick_(start_tick) {}

void Mote::on_frame_received(const Message& msg, double rssi_dbm, int copies) {
  const std::uint64_t airtime = frame_airtime_ticks(msg.payload_bytes);
  charge_rx(airtime * static_cast<std::uint64_t>(copies));
  charge_cpu(kCpuTicksPerFrame);

  auto [it, inserted] = neighbors_.try_emplace(msg.src);
  NeighborRecord& record = it->second;
  if (inserted) {
    record.id = msg.src;
  }
  record.claimed_position = msg.claimed_src_position;
  record.rssi.push(rssi_dbm);
  record.last_heard = msg.sent_at;
}

PowertraceCounters Mote::snapshot_powertrace(Tick now) const {
  if (now < start_tick_) {
    throw InvariantError("snapshot requested before node start");
  }
  const std::uint64_t elapsed = now - start_tick_;
  if (cpu_ > elapsed) {
    throw InvariantError("node " + std::to_string(spec_.id) +
                         ": cpu ticks exceed elapsed time");
  }
  if (tx_ + rx_ > elapsed) {
    throw InvariantError("node " + std::to_string(spec_.id) +
                         ": radio ticks exceed elapsed time");
  }
  return PowertraceCounters{cpu_, elapsed - cpu_, tx_, rx_};
}

}  // namespace motesim

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motesim/kernel.hpp"
#include "motesim/radio.hpp"

namespace motesim {

enum class Role { normal, anchor, attacker };

const char* role_name(Role role);

// 802.15.4 / CC2420 framing constants used by the airtime accounting.
inline constexpr int kFrameOverheadBytes = 33;
inline constexpr int kMaxPayloadBytes = 114;
inline constexpr std::uint64_t kRadioBitsPerSecond = 250000;
inline constexpr std::uint64_t kAckAirtimeTicks = 12;      // 11-byte MAC ack
inline constexpr std::uint64_t kCpuTicksPerFrame = 66;     // ~2 ms per frame
inline constexpr std::size_t kRssiRingCapacity = 16;
inline constexpr int kOverhearDivisor = 4;                 // preamble-only cost

// Default payload sizes per message kind.
inline constexpr int kBeaconPayloadBytes = 50;     // id + claimed position + neighbor digest
inline constexpr int kBroadcastPayloadBytes = 20;  // short hello
inline constexpr int kUnicastPayloadBytes = 114;   // bulk data push
inline constexpr int kFloodPayloadBytes = 114;

// On-air duration in ticks for a frame with the given payload.
std::uint64_t frame_airtime_ticks(int payload_bytes);
std::uint64_t overhear_ticks(std::uint64_t airtime);

struct BatteryModel;

struct MoteSpec {
  NodeId id = 0;
  Position position;
  Position claimed_position;  // advertised in beacons; equals position for honest nodes
  Role role = Role::normal;
  bool transmits = true;      // false models a pure sniffer
};

// Cumulative per-state tick counters; the software energy-profiler quartet.
struct PowertraceCounters {
  std::uint64_t cpu = 0;
  std::uint64_t lpm = 0;
  std::uint64_t tx = 0;
  std::uint64_t rx = 0;

  PowertraceCounters operator+(const PowertraceCounters& o) const;
  // Componentwise difference; throws InvariantError if any counter decreases.
  PowertraceCounters operator-(const PowertraceCounters& o) const;
  bool operator==(const PowertraceCounters&) const = default;
};

enum class MessageKind { beacon, broadcast_app, unicast_app, ids_probe };

const char* message_kind_name(MessageKind kind);

struct NeighborDigestEntry {
  NodeId neighbor = 0;
  double median_rssi_dbm = 0.0;
};

struct Message {
  MessageKind kind = MessageKind::broadcast_app;
  NodeId src = 0;
  Position claimed_src_position;
  int payload_bytes = 1;  // in [1, kMaxPayloadBytes]
  Tick sent_at = 0;
  std::optional<NodeId> unicast_dest;
  bool tunneled = false;  // set on wormhole re-emissions; never re-tunneled
  std::vector<NeighborDigestEntry> digest;  // beacons only
};

// Fixed-capacity ring of the most recent RSSI samples for one neighbor.
class RssiRing {
 public:
  explicit RssiRing(std::size_t capacity = kRssiRingCapacity) : capacity_(capacity) {}

  void push(double rssi_dbm);
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  // Oldest-first sample view.
  const std::vector<double>& samples() const { return samples_; }

 private:
  std::size_t capacity_;
  std::vector<double> samples_;
};

struct NeighborRecord {
  NodeId id = 0;
  Position claimed_position;
  RssiRing rssi;
  Tick last_heard = 0;
};

// Per-node state: powertrace accounting plus the neighbor table that the
// intrusion detection reads on the anchor.
class Mote {
 public:
  explicit Mote(MoteSpec spec, Tick start_tick = 0);

  const MoteSpec& spec() const { return spec_; }
  MoteSpec& spec() { return spec_; }

  void charge_cpu(std::uint64_t ticks) { cpu_ += ticks; }
  void charge_tx(std::uint64_t ticks) { tx_ += ticks; }
  void charge_rx(std::uint64_t ticks) { rx_ += ticks; }

  // Full reception: charges rx for all copies plus frame-processing CPU and
  // upserts the neighbor record with one verbatim RSSI sample.
  void on_frame_received(const Message& msg, double rssi_dbm, int copies);

  // Cumulative counters at `now`; lpm is the non-CPU remainder of elapsed
  // time. Throws InvariantError if accounting exceeded wall-clock.
  PowertraceCounters snapshot_powertrace(Tick now) const;

  const std::map<NodeId, NeighborRecord>& neighbors() const { return neighbors_; }
  std::map<NodeId, NeighborRecord>& neighbors() { return neighbors_; }

 private:
  MoteSpec spec_;
  Tick start_tick_ = 0;
  std::uint64_t cpu_ = 0;
  std::uint64_t tx_ = 0;
  std::uint64_t rx_ = 0;
  std::map<NodeId, NeighborRecord> neighbors_;
};

}  // namespace motesim

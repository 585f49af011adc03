#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "motesim/mote.hpp"
#include "motesim/radio.hpp"

namespace motesim {

struct IdsConfig {
  bool enabled = false;
  double epsilon_m = 1.0;        // tolerated gap between claimed and RSSI distance
  int window_rounds = 10;        // sliding suspicion window K
  double theta = 0.7;            // declaration threshold on p
  double round_period_s = 10.0;
  bool monitor_6br = true;
  std::uint64_t cpu_cost_per_round = 1638;   // ~50 ms
  std::uint64_t rx_listen_per_round = 3277;  // ~100 ms

  void validate() const;
};

enum class VerdictState { clean, suspected, attacker };

const char* verdict_state_name(VerdictState state);

// Flag evidence from the most recent round in which an identity looked
// inconsistent; kept so declarations can be audited after the run.
struct FlagEvidence {
  double d_rssi_m = 0.0;
  double d_geom_m = 0.0;
  bool out_of_range = false;
  Tick tick = 0;
};

struct Suspicion {
  NodeId id = 0;
  int flagged_rounds = 0;   // within the sliding window
  int observed_rounds = 0;  // within the sliding window (<= K)
  int total_observed = 0;
  double p = 0.0;           // flagged_rounds / observed_rounds
  std::deque<bool> window;
  std::optional<FlagEvidence> last_flag;
};

struct Verdict {
  NodeId id = 0;
  VerdictState state = VerdictState::clean;
  double p = 0.0;
  std::vector<NodeId> victims;  // observers holding the inconsistent records
  Tick declared_at = 0;
};

struct ConsistencyFlag {
  NodeId subject = 0;
  NodeId observer = 0;
  bool flagged = false;
  double d_rssi_m = 0.0;
  double d_geom_m = 0.0;
  bool out_of_range = false;
};

struct RoundOutcome {
  std::vector<ConsistencyFlag> checks;   // every identity evaluated this round
  std::vector<Verdict> transitions;      // state changes, including declarations
  std::uint64_t cpu_ticks = 0;           // charged to the anchor
  std::uint64_t rx_ticks = 0;
  bool escalated_now = false;
};

double median_dbm(std::span<const double> samples);

struct LinkKey {
  NodeId a = 0;
  NodeId b = 0;
  std::vector<bool> bits;

  std::string bit_string() const;
};

// Quantizes a reciprocal-channel RSSI window into key bits: bit i is set
// iff sample i exceeds the window median. Requires window size >= key_bits.
LinkKey derive_link_key(NodeId a, NodeId b, std::span<const double> rssi_window,
                        std::size_t key_bits = 32);

// Receiver-side isolation of declared attackers.
class Blacklist {
 public:
  // Accepts only Attacker verdicts; anything else is a no-op returning false.
  bool apply(const Verdict& verdict, Tick activate_at);
  bool drops(NodeId src, Tick now) const;
  bool contains(NodeId src) const { return active_at_.count(src) > 0; }

 private:
  std::map<NodeId, Tick> active_at_;
};

// Anchor-side detector: each round it replays the range-consistency check
// over the anchor's neighbor table, accumulates per-identity suspicion over
// a sliding window, and declares attackers past the threshold.
class AnchorIds {
 public:
  AnchorIds(IdsConfig config, NodeId anchor_id, Position anchor_position, RadioSpec radio,
            EnvironmentProfile env, std::optional<NodeId> border_router);

  // The core flag rule: inconsistent iff the RSSI-implied distance differs
  // from the claimed geometric distance by more than epsilon, or a link
  // exists to a claimed position beyond radio range.
  static bool inconsistent(double d_rssi_m, double d_geom_m, double epsilon_m, double r_max_m);

  // Runs one detection round over the anchor's neighbor records and, when
  // escalated, over link reports overheard from neighbor beacons.
  // Identities with an empty RSSI ring are skipped (not counted observed).
  RoundOutcome run_round(const std::map<NodeId, NeighborRecord>& neighbors,
                         const std::map<NodeId, std::vector<NeighborDigestEntry>>& overheard,
                         Tick now);

  Tick round_period_ticks() const;
  bool escalated() const { return escalated_; }
  const IdsConfig& config() const { return config_; }
  double max_range() const { return r_max_; }

  VerdictState state_of(NodeId id) const;
  double suspicion_of(NodeId id) const;
  const std::map<NodeId, Suspicion>& table() const { return table_; }
  const std::map<NodeId, Verdict>& verdicts() const { return verdicts_; }

 private:
  void observe(NodeId id, bool flagged, const FlagEvidence& evidence);
  std::optional<Verdict> reassess(NodeId id, Tick now);

  IdsConfig config_;
  NodeId anchor_id_;
  Position anchor_position_;
  RadioSpec radio_;
  EnvironmentProfile env_;
  std::optional<NodeId> border_router_;
  double r_max_;
  bool escalated_ = false;
  std::map<NodeId, Suspicion> table_;
  std::map<NodeId, Verdict> verdicts_;  // current state per identity
  std::map<NodeId, std::set<NodeId>> victims_of_;
};

}  // namespace motesim

#include "motesim/ids.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "motesim/errors.hpp"

namespace motesim {

void IdsConfig::validate() const {
  if (!(epsilon_m > 0.0)) throw ValidationError("ids.epsilon: must be > 0");
  if (window_rounds < 1) throw ValidationError("ids.rounds: must be >= 1");
  if (!(theta > 0.0 && theta <= 1.0)) throw ValidationError("ids.theta: must be in (0, 1]");
  if (!(round_period_s > 0.0)) throw ValidationError("ids.round_period: must be > 0");
}

const char* verdict_state_name(VerdictState state) {
  switch (state) {
    case VerdictState::clean: return "clean";
    case VerdictState::suspected: return "suspected";
    case VerdictState::attacker: return "attacker";
  }
  return "unknown";
}

double median_dbm(std::span<const double> samples) {
  if (samples.empty()) {
    throw DomainError("median of an empty sample set");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

std::string LinkKey::bit_string() const {
  std::string out;
  out.reserve(bits.size());
  for (bool bit : bits) out.push_back(bit ? '1' : '0');
  return out;
}

LinkKey derive_link_key(NodeId a, NodeId b, std::span<const double> rssi_window,
                        std::size_t key_bits) {
  if (rssi_window.size() < key_bits) {
    throw DomainError("link key needs " + std::to_string(key_bits) + " samples, got " +
                      std::to_string(rssi_window.size()));
  }
  const double mid = median_dbm(rssi_window);
  LinkKey key{a, b, {}};
  key.bits.reserve(key_bits);
  for (std::size_t i = 0; i < key_bits; ++i) {
    key.bits.push_back(rssi_window[i] > mid);
  }
  return key;
}

bool Blacklist::apply(const Verdict& verdict, Tick activate_at) {
  if (verdict.state != VerdictState::attacker) return false;
  auto it = active_at_.find(verdict.id);
  if (it == active_at_.end()) {
    active_at_.emplace(verdict.id, activate_at);
  } else if (activate_at < it->second) {
    it->second = activate_at;
  }
  return true;
}

bool Blacklist::drops(NodeId src, Tick now) const {
  auto it = active_at_.find(src);
  return it != active_at_.end() && now >= it->second;
}

AnchorIds::AnchorIds(IdsConfig config, NodeId anchor_id, Position anchor_position,
                     RadioSpec radio, EnvironmentProfile env,
                     std::optional<NodeId> border_router)
    : config_(std::move(config)),
      anchor_id_(anchor_id),
      anchor_position_(anchor_position),
      radio_(radio),
      env_(std::move(env)),
      border_router_(border_router),
      r_max_(max_range_m(radio_, env_)) {
  config_.validate();
}

bool AnchorIds::inconsistent(double d_rssi_m, double d_geom_m, double epsilon_m,
                             double r_max_m) {
  if (std::abs(d_rssi_m - d_geom_m) > epsilon_m) return true;
  return d_geom_m > r_max_m;  // a link exists to a claim beyond radio range
}

Tick AnchorIds::round_period_ticks() const {
  const double period = escalated_ ? config_.round_period_s / 2.0 : config_.round_period_s;
  return ticks_from_seconds(period);
}

VerdictState AnchorIds::state_of(NodeId id) const {
  auto it = verdicts_.find(id);
  return it == verdicts_.end() ? VerdictState::clean : it->second.state;
}

double AnchorIds::suspicion_of(NodeId id) const {
  auto it = table_.find(id);
  return it == table_.end() ? 0.0 : it->second.p;
}

void AnchorIds::observe(NodeId id, bool flagged, const FlagEvidence& evidence) {
  Suspicion& s = table_[id];
  s.id = id;
  s.window.push_back(flagged);
  while (static_cast<int>(s.window.size()) > config_.window_rounds) {
    s.window.pop_front();
  }
  s.observed_rounds = static_cast<int>(s.window.size());
  s.flagged_rounds = static_cast<int>(std::count(s.window.begin(), s.window.end(), true));
  s.total_observed += 1;
  s.p = s.observed_rounds == 0
            ? 0.0
            : static_cast<double>(s.flagged_rounds) / static_cast<double>(s.observed_rounds);
  if (flagged) s.last_flag = evidence;
}

std::optional<Verdict> AnchorIds::reassess(NodeId id, Tick now) {
  const Suspicion& s = table_.at(id);
  Verdict& current = verdicts_[id];
  if (current.id == 0 && id != 0) {
    current.id = id;
    current.state = VerdictState::clean;
  }
  if (current.state == VerdictState::attacker) return std::nullopt;  // terminal

  VerdictState next = VerdictState::clean;
  if (s.observed_rounds >= config_.window_rounds && s.p >= config_.theta) {
    next = VerdictState::attacker;
  } else if (s.p > 0.0) {
    next = VerdictState::suspected;
  }

  const bool changed = next != current.state;
  current.p = s.p;
  if (!changed) return std::nullopt;

  current.state = next;
  current.declared_at = now;
  return current;
}

RoundOutcome AnchorIds::run_round(const std::map<NodeId, NeighborRecord>& neighbors,
                                  const std::map<NodeId, std::vector<NeighborDigestEntry>>& overheard,
                                  Tick now) {
  RoundOutcome outcome;
  outcome.cpu_ticks = config_.cpu_cost_per_round * (escalated_ ? 2 : 1);
  outcome.rx_ticks = config_.rx_listen_per_round;

  // Per-identity flag for this round: the anchor's own check, plus any
  // overheard link reports once escalated.
  struct RoundView {
    bool flagged = false;
    FlagEvidence evidence;
    std::set<NodeId> flaggers;
  };
  std::map<NodeId, RoundView> views;

  for (const auto& [id, record] : neighbors) {
    if (id == anchor_id_) continue;
    if (record.rssi.empty()) continue;  // nothing measurable this round
    if (state_of(id) == VerdictState::attacker) continue;

    const double d_geom = geometric_distance(anchor_position_, record.claimed_position);
    const double d_rssi =
        estimate_distance(radio_, median_dbm(record.rssi.samples()), env_);
    const bool out_of_range = d_geom > r_max_;
    const bool flagged = inconsistent(d_rssi, d_geom, config_.epsilon_m, r_max_);

    outcome.checks.push_back(ConsistencyFlag{id, anchor_id_, flagged, d_rssi, d_geom, out_of_range});
    RoundView& view = views[id];
    if (flagged) {
      view.flagged = true;
      view.evidence = FlagEvidence{d_rssi, d_geom, out_of_range, now};
      view.flaggers.insert(anchor_id_);
    } else if (!view.flagged) {
      view.evidence = FlagEvidence{d_rssi, d_geom, out_of_range, now};
    }
  }

  if (escalated_) {
    for (const auto& [reporter, digest] : overheard) {
      auto reporter_rec = neighbors.find(reporter);
      if (reporter_rec == neighbors.end()) continue;
      const Position reporter_pos = reporter_rec->second.claimed_position;
      for (const NeighborDigestEntry& entry : digest) {
        const NodeId subject = entry.neighbor;
        if (subject == anchor_id_ || subject == reporter) continue;
        auto subject_rec = neighbors.find(subject);
        if (subject_rec == neighbors.end()) continue;
        if (state_of(subject) == VerdictState::attacker) continue;

        const double d_geom =
            geometric_distance(reporter_pos, subject_rec->second.claimed_position);
        const double d_rssi = estimate_distance(radio_, entry.median_rssi_dbm, env_);
        const bool out_of_range = d_geom > r_max_;
        const bool flagged = inconsistent(d_rssi, d_geom, config_.epsilon_m, r_max_);

        outcome.checks.push_back(
            ConsistencyFlag{subject, reporter, flagged, d_rssi, d_geom, out_of_range});
        if (flagged) {
          RoundView& view = views[subject];
          view.flagged = true;
          view.evidence = FlagEvidence{d_rssi, d_geom, out_of_range, now};
          view.flaggers.insert(reporter);
        }
      }
    }
  }

  for (const auto& [id, view] : views) {
    observe(id, view.flagged, view.evidence);
    if (view.flagged) {
      auto& victims = victims_of_[id];
      victims.insert(view.flaggers.begin(), view.flaggers.end());
    }
    if (auto transition = reassess(id, now)) {
      const auto& victims = victims_of_[id];
      transition->victims.assign(victims.begin(), victims.end());
      verdicts_[id].victims = transition->victims;
      outcome.transitions.push_back(*transition);
    }
  }

  if (config_.monitor_6br && !escalated_ && border_router_.has_value() &&
      state_of(*border_router_) != VerdictState::clean) {
    escalated_ = true;
    outcome.escalated_now = true;
  }

  return outcome;
}

}  // namespace motesim

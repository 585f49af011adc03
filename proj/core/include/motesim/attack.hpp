#pragma once

#include <optional>
#include <vector>

#include "motesim/kernel.hpp"
#include "motesim/radio.hpp"
#include "motesim/rng.hpp"

namespace motesim {

enum class AttackKind { none, wormhole, sybil, flooding };

const char* attack_kind_name(AttackKind kind);

struct WormholeConfig {
  NodeId endpoint_a = 0;
  NodeId endpoint_b = 0;
};

struct SybilConfig {
  int fake_count = 5;
  // Empty means: drawn uniformly inside the deployment bounding box from the
  // attacker's attack stream at setup.
  std::vector<Position> forged_positions;
};

struct FloodingConfig {
  double period_s = 0.25;
  // Flood frames spoof the sender's advertised position by this offset,
  // which is what makes the source attributable to the detector.
  double claim_offset_m = 25.0;
};

struct AttackConfig {
  AttackKind kind = AttackKind::none;
  std::vector<NodeId> attackers;  // empty: node nearest the deployment centroid
  WormholeConfig wormhole;
  SybilConfig sybil;
  FloodingConfig flooding;
};

struct BoundingBox {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
};

BoundingBox bounding_box(const std::vector<Position>& positions);

// Node nearest the centroid of the deployment; ties break toward the lowest id.
NodeId central_node(const std::vector<std::pair<NodeId, Position>>& nodes);

std::vector<Position> draw_forged_positions(const BoundingBox& box, int count, RngStream& rng);

}  // namespace motesim

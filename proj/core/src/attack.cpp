#include "motesim/attack.hpp"

#include <cmath>
#include <limits>

#include "motesim/errors.hpp"

namespace motesim {

const char* attack_kind_name(AttackKind kind) {
  switch (kind) {
    case AttackKind::none: return "none";
    case AttackKind::wormhole: return "wormhole";
    case AttackKind::sybil: return "sybil";
    case AttackKind::flooding: return "flooding";
  }
  return "unknown";
}

BoundingBox bounding_box(const std::vector<Position>& positions) {
  if (positions.empty()) {
    throw DomainError("bounding box of an empty deployment");
  }
  BoundingBox box{positions[0].x, positions[0].y, positions[0].x, positions[0].y};
  for (const Position& p : positions) {
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

NodeId central_node(const std::vector<std::pair<NodeId, Position>>& nodes) {
  if (nodes.empty()) {
    throw DomainError("central node of an empty deployment");
  }
  double cx = 0, cy = 0;
  for (const auto& [id, pos] : nodes) {
    cx += pos.x;
    cy += pos.y;
  }
  cx /= static_cast<double>(nodes.size());
  cy /= static_cast<double>(nodes.size());

  NodeId best = nodes.front().first;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& [id, pos] : nodes) {
    const double d = geometric_distance(pos, Position{cx, cy});
    if (d < best_d || (d == best_d && id < best)) {
      best_d = d;
      best = id;
    }
  }
  return best;
}

std::vector<Position> draw_forged_positions(const BoundingBox& box, int count, RngStream& rng) {
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double x = box.min_x == box.max_x ? box.min_x : rng.uniform(box.min_x, box.max_x);
    const double y = box.min_y == box.max_y ? box.min_y : rng.uniform(box.min_y, box.max_y);
    out.push_back(Position{x, y});
  }
  return out;
}

}  // namespace motesim

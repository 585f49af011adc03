#include "motesim/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "motesim/errors.hpp"

namespace motesim {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ValidationError(path + ": " + message);
}

std::string shortest(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) fail(path.empty() ? key : path + "." + key, "unknown field");
  }
}

const json* find(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double get_number(const json& obj, const char* key, const std::string& path, double fallback) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_number()) fail(path + "." + key, "expected a number");
  return v->get<double>();
}

std::int64_t get_int(const json& obj, const char* key, const std::string& path,
                     std::int64_t fallback) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_number_integer()) fail(path + "." + key, "expected an integer");
  return v->get<std::int64_t>();
}

bool get_bool(const json& obj, const char* key, const std::string& path, bool fallback) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_boolean()) fail(path + "." + key, "expected a boolean");
  return v->get<bool>();
}

std::string get_string(const json& obj, const char* key, const std::string& path,
                       const std::string& fallback) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_string()) fail(path + "." + key, "expected a string");
  return v->get<std::string>();
}

double get_length(const json& obj, const char* key, const std::string& path) {
  const json* v = find(obj, key);
  if (!v) fail(path + "." + key, "missing required length");
  if (!v->is_string()) fail(path + "." + key, "lengths are unit-suffixed strings like \"5 ft\"");
  try {
    return parse_length_m(v->get<std::string>());
  } catch (const ValidationError& e) {
    fail(path + "." + key, e.what());
  }
}

Position parse_position(const json& obj, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object with x/y lengths");
  check_keys(obj, path, {"x", "y"});
  return Position{get_length(obj, "x", path), get_length(obj, "y", path)};
}

json position_json(const Position& p) {
  return json{{"x", format_length_m(p.x)}, {"y", format_length_m(p.y)}};
}

EnvironmentProfile parse_environment(const json& value) {
  if (value.is_string()) {
    return environment_preset(value.get<std::string>());
  }
  if (!value.is_object()) fail("environment", "expected a preset name or an inline profile");
  check_keys(value, "environment",
             {"name", "path_loss_exponent", "reference_loss_db", "shadowing_sigma_db",
              "noise_floor_dbm", "retransmission_bias"});
  EnvironmentProfile env;
  env.name = get_string(value, "name", "environment", "custom");
  env.path_loss_exponent = get_number(value, "path_loss_exponent", "environment", 2.0);
  env.reference_loss_db = get_number(value, "reference_loss_db", "environment", 55.0);
  env.shadowing_sigma_db = get_number(value, "shadowing_sigma_db", "environment", 0.0);
  env.noise_floor_dbm = get_number(value, "noise_floor_dbm", "environment", -100.0);
  env.retransmission_bias = get_number(value, "retransmission_bias", "environment", 0.0);
  return env;
}

AttackKind parse_attack_kind(const std::string& name) {
  if (name == "none") return AttackKind::none;
  if (name == "wormhole") return AttackKind::wormhole;
  if (name == "sybil") return AttackKind::sybil;
  if (name == "flooding") return AttackKind::flooding;
  fail("attack.kind", "unknown kind '" + name + "'");
}

std::vector<NodeId> parse_id_array(const json& obj, const char* key, const std::string& path) {
  std::vector<NodeId> out;
  const json* v = find(obj, key);
  if (!v) return out;
  if (!v->is_array()) fail(path + "." + key, "expected an array of node ids");
  for (const json& item : *v) {
    if (!item.is_number_integer()) fail(path + "." + key, "expected integer node ids");
    out.push_back(item.get<NodeId>());
  }
  return out;
}

}  // namespace

const char* traffic_mode_name(TrafficMode mode) {
  return mode == TrafficMode::broadcast ? "broadcast" : "unicast";
}

const char* condition_name(Condition condition) {
  switch (condition) {
    case Condition::baseline: return "baseline";
    case Condition::attack: return "attack";
    case Condition::attack_ids: return "attack+ids";
    case Condition::baseline_ids: return "baseline+ids";
  }
  return "unknown";
}

Condition condition_from_name(const std::string& name) {
  if (name == "baseline") return Condition::baseline;
  if (name == "attack") return Condition::attack;
  if (name == "attack+ids") return Condition::attack_ids;
  if (name == "baseline+ids") return Condition::baseline_ids;
  throw ValidationError("conditions: unknown condition '" + name + "'");
}

double parse_length_m(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || !std::isfinite(value)) {
    throw ValidationError("length '" + text + "': expected a number followed by a unit");
  }
  std::string unit(end);
  const auto strip = [](std::string& s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  };
  strip(unit);
  if (unit == "m") return value;
  if (unit == "ft") return value * kMetersPerFoot;
  throw ValidationError("length '" + text + "': unit must be 'm' or 'ft'");
}

std::string format_length_m(double meters) {
  return shortest(meters) + " m";
}

void ScenarioConfig::validate() const {
  if (name.empty()) fail("name", "must not be empty");
  if (!(duration_s > 0.0)) fail("duration_s", "must be > 0");
  if (!(powertrace_interval_s > 0.0)) fail("powertrace_interval_s", "must be > 0");
  if (duration_s < 2.0 * powertrace_interval_s) {
    fail("duration_s", "must be at least 2 x powertrace_interval_s");
  }
  if (nodes.size() < 2) fail("nodes", "at least two traffic nodes required");

  std::set<NodeId> ids_seen;
  for (const NodeEntry& node : nodes) {
    if (node.id < 1) fail("nodes", "node ids must be >= 1");
    if (!ids_seen.insert(node.id).second) {
      fail("nodes", "duplicate node id " + std::to_string(node.id));
    }
    if (!std::isfinite(node.position.x) || !std::isfinite(node.position.y)) {
      fail("nodes", "node " + std::to_string(node.id) + " has non-finite coordinates");
    }
  }
  if (anchor_id < 1) fail("anchor.id", "must be >= 1");
  if (ids_seen.count(anchor_id)) {
    fail("anchor.id", "collides with traffic node " + std::to_string(anchor_id));
  }

  if (!(traffic.period_s > 0.0)) fail("traffic.period_s", "must be > 0");
  if (traffic.jitter_s < 0.0) fail("traffic.jitter_s", "must be >= 0");
  if (traffic.jitter_s >= traffic.period_s) {
    fail("traffic.jitter_s", "must be smaller than period_s");
  }
  for (const auto& [from, to] : traffic.peers) {
    if (!ids_seen.count(from)) {
      fail("traffic.peers", "unknown node " + std::to_string(from));
    }
    if (!ids_seen.count(to)) {
      fail("traffic.peers", "unknown peer " + std::to_string(to));
    }
    if (from == to) fail("traffic.peers", "node " + std::to_string(from) + " paired with itself");
  }
  if (traffic.mode == TrafficMode::unicast) {
    int senders = 0;
    for (const NodeEntry& node : nodes) {
      if (!node.silent) ++senders;
    }
    if (senders < 2) fail("traffic", "unicast needs at least two transmitting nodes");
  }

  if (!(beacon.period_s > 0.0)) fail("beacon.period_s", "must be > 0");
  if (beacon.jitter_s < 0.0 || beacon.jitter_s >= beacon.period_s) {
    fail("beacon.jitter_s", "must be in [0, period_s)");
  }

  environment.validate();
  radio.validate();
  ids.validate();
  battery.validate();
  energy.validate();

  const auto is_silent = [&](NodeId id) {
    for (const NodeEntry& node : nodes) {
      if (node.id == id) return node.silent;
    }
    return false;
  };

  for (NodeId attacker : attack.attackers) {
    if (!ids_seen.count(attacker)) {
      fail("attack.attackers", "unknown node " + std::to_string(attacker));
    }
    if (is_silent(attacker)) {
      fail("attack.attackers", "node " + std::to_string(attacker) + " is silent");
    }
  }

  switch (attack.kind) {
    case AttackKind::none:
      break;
    case AttackKind::wormhole: {
      const auto& w = attack.wormhole;
      if (w.endpoint_a == w.endpoint_b) {
        fail("attack.wormhole", "endpoints must be two distinct nodes");
      }
      for (NodeId endpoint : {w.endpoint_a, w.endpoint_b}) {
        if (!ids_seen.count(endpoint)) {
          fail("attack.wormhole", "unknown endpoint " + std::to_string(endpoint));
        }
        if (is_silent(endpoint)) {
          fail("attack.wormhole", "endpoint " + std::to_string(endpoint) + " is silent");
        }
      }
      break;
    }
    case AttackKind::sybil: {
      if (attack.sybil.fake_count < 1) fail("attack.sybil.fake_count", "must be >= 1");
      if (!attack.sybil.forged_positions.empty() &&
          static_cast<int>(attack.sybil.forged_positions.size()) != attack.sybil.fake_count) {
        fail("attack.sybil.forged_positions",
             "need exactly fake_count entries or none (drawn at setup)");
      }
      break;
    }
    case AttackKind::flooding: {
      if (!(attack.flooding.period_s > 0.0)) fail("attack.flooding.period_s", "must be > 0");
      if (!std::isfinite(attack.flooding.claim_offset_m)) {
        fail("attack.flooding.claim_offset_m", "must be finite");
      }
      break;
    }
  }

  if (attack.kind == AttackKind::sybil || attack.kind == AttackKind::flooding) {
    // Resolvable attacker required; resolved_attacker throws otherwise.
    (void)resolved_attacker();
  }

  if (border_router.has_value() && !ids_seen.count(*border_router)) {
    fail("border_router", "unknown node " + std::to_string(*border_router));
  }
}

std::vector<Position> ScenarioConfig::deployment_positions() const {
  std::vector<Position> positions;
  positions.reserve(nodes.size() + 1);
  for (const NodeEntry& node : nodes) positions.push_back(node.position);
  positions.push_back(anchor_position);
  return positions;
}

bool ScenarioConfig::has_node(NodeId id) const {
  for (const NodeEntry& node : nodes) {
    if (node.id == id) return true;
  }
  return false;
}

NodeId ScenarioConfig::resolved_attacker() const {
  if (!attack.attackers.empty()) return attack.attackers.front();
  std::vector<std::pair<NodeId, Position>> candidates;
  for (const NodeEntry& node : nodes) {
    if (!node.silent) candidates.emplace_back(node.id, node.position);
  }
  if (candidates.empty()) {
    throw ValidationError("attack.attackers: no transmitting node available");
  }
  return central_node(candidates);
}

std::map<NodeId, NodeId> ScenarioConfig::resolved_peers() const {
  if (!traffic.peers.empty()) return traffic.peers;
  std::vector<NodeId> ring;
  for (const NodeEntry& node : nodes) {
    if (!node.silent) ring.push_back(node.id);
  }
  std::sort(ring.begin(), ring.end());
  std::map<NodeId, NodeId> peers;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    peers[ring[i]] = ring[(i + 1) % ring.size()];
  }
  return peers;
}

ScenarioConfig parse_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("scenario: JSON parse error: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("scenario: top level must be an object");
  check_keys(root, "",
             {"name", "duration_s", "seed", "nodes", "anchor", "border_router", "traffic",
              "beacon", "environment", "radio", "attack", "ids", "powertrace_interval_s",
              "battery", "energy"});

  ScenarioConfig config;
  config.name = get_string(root, "name", "scenario", "scenario");
  config.duration_s = get_number(root, "duration_s", "scenario", 600.0);
  const std::int64_t seed = get_int(root, "seed", "scenario", 1);
  if (seed < 0) fail("seed", "must be >= 0");
  config.seed = static_cast<std::uint64_t>(seed);

  const json* nodes = find(root, "nodes");
  if (!nodes || !nodes->is_object()) fail("nodes", "required object with 'grid' or 'list'");
  check_keys(*nodes, "nodes", {"grid", "list"});
  if (const json* grid = find(*nodes, "grid")) {
    check_keys(*grid, "nodes.grid", {"rows", "cols", "spacing", "first_id"});
    const std::int64_t rows = get_int(*grid, "rows", "nodes.grid", 0);
    const std::int64_t cols = get_int(*grid, "cols", "nodes.grid", 0);
    if (rows < 1 || cols < 1) fail("nodes.grid", "rows and cols must be >= 1");
    const double spacing = get_length(*grid, "spacing", "nodes.grid");
    const NodeId first_id = get_int(*grid, "first_id", "nodes.grid", 1);
    for (std::int64_t row = 0; row < rows; ++row) {
      for (std::int64_t col = 0; col < cols; ++col) {
        config.nodes.push_back(NodeEntry{
            first_id + row * cols + col,
            Position{static_cast<double>(col) * spacing, static_cast<double>(row) * spacing},
            false});
      }
    }
  } else if (const json* list = find(*nodes, "list")) {
    if (!list->is_array()) fail("nodes.list", "expected an array of node entries");
    std::size_t index = 0;
    for (const json& entry : *list) {
      const std::string path = "nodes.list[" + std::to_string(index++) + "]";
      if (!entry.is_object()) fail(path, "expected an object");
      check_keys(entry, path, {"id", "position", "silent"});
      NodeEntry node;
      node.id = get_int(entry, "id", path, 0);
      const json* pos = find(entry, "position");
      if (!pos) fail(path + ".position", "required");
      node.position = parse_position(*pos, path + ".position");
      node.silent = get_bool(entry, "silent", path, false);
      config.nodes.push_back(node);
    }
  } else {
    fail("nodes", "provide either 'grid' or 'list'");
  }

  const json* anchor = find(root, "anchor");
  if (!anchor || !anchor->is_object()) fail("anchor", "required object with id and position");
  check_keys(*anchor, "anchor", {"id", "position"});
  config.anchor_id = get_int(*anchor, "id", "anchor", 0);
  const json* anchor_pos = find(*anchor, "position");
  if (!anchor_pos) fail("anchor.position", "required");
  config.anchor_position = parse_position(*anchor_pos, "anchor.position");

  if (const json* br = find(root, "border_router")) {
    if (!br->is_number_integer()) fail("border_router", "expected a node id");
    config.border_router = br->get<NodeId>();
  }

  if (const json* traffic = find(root, "traffic")) {
    check_keys(*traffic, "traffic", {"mode", "period_s", "jitter_s", "peers"});
    const std::string mode = get_string(*traffic, "mode", "traffic", "broadcast");
    if (mode == "broadcast") {
      config.traffic.mode = TrafficMode::broadcast;
    } else if (mode == "unicast") {
      config.traffic.mode = TrafficMode::unicast;
    } else {
      fail("traffic.mode", "must be 'broadcast' or 'unicast'");
    }
    config.traffic.period_s = get_number(*traffic, "period_s", "traffic", 4.0);
    config.traffic.jitter_s = get_number(*traffic, "jitter_s", "traffic", 2.0);
    if (const json* peers = find(*traffic, "peers")) {
      if (!peers->is_object()) fail("traffic.peers", "expected an object of id -> id");
      for (const auto& [key, value] : peers->items()) {
        NodeId from = 0;
        const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), from);
        if (ec != std::errc() || ptr != key.data() + key.size()) {
          fail("traffic.peers", "bad node id key '" + key + "'");
        }
        if (!value.is_number_integer()) fail("traffic.peers", "peer ids must be integers");
        config.traffic.peers[from] = value.get<NodeId>();
      }
    }
  }

  if (const json* beacon = find(root, "beacon")) {
    check_keys(*beacon, "beacon", {"enabled", "period_s", "jitter_s"});
    config.beacon.enabled = get_bool(*beacon, "enabled", "beacon", true);
    config.beacon.period_s = get_number(*beacon, "period_s", "beacon", 2.5);
    config.beacon.jitter_s = get_number(*beacon, "jitter_s", "beacon", 0.25);
  }

  if (const json* env = find(root, "environment")) {
    config.environment = parse_environment(*env);
  }

  if (const json* radio = find(root, "radio")) {
    check_keys(*radio, "radio", {"tx_power_dbm", "rx_sensitivity_dbm"});
    config.radio.tx_power_dbm = get_number(*radio, "tx_power_dbm", "radio", 0.0);
    config.radio.rx_sensitivity_dbm = get_number(*radio, "rx_sensitivity_dbm", "radio", -90.0);
  }

  if (const json* attack = find(root, "attack")) {
    check_keys(*attack, "attack",
               {"kind", "attackers", "endpoints", "fake_count", "forged_positions", "period_s",
                "claim_offset_m"});
    config.attack.kind = parse_attack_kind(get_string(*attack, "kind", "attack", "none"));
    config.attack.attackers = parse_id_array(*attack, "attackers", "attack");
    if (config.attack.kind == AttackKind::wormhole) {
      const std::vector<NodeId> endpoints = parse_id_array(*attack, "endpoints", "attack");
      if (endpoints.size() != 2) {
        fail("attack.wormhole", "exactly two endpoints required");
      }
      config.attack.wormhole = WormholeConfig{endpoints[0], endpoints[1]};
      if (config.attack.attackers.empty()) {
        config.attack.attackers = endpoints;
      }
    }
    if (config.attack.kind == AttackKind::sybil) {
      config.attack.sybil.fake_count =
          static_cast<int>(get_int(*attack, "fake_count", "attack.sybil", 5));
      if (const json* forged = find(*attack, "forged_positions")) {
        if (!forged->is_array()) fail("attack.sybil.forged_positions", "expected an array");
        std::size_t index = 0;
        for (const json& pos : *forged) {
          config.attack.sybil.forged_positions.push_back(parse_position(
              pos, "attack.sybil.forged_positions[" + std::to_string(index++) + "]"));
        }
      }
    }
    if (config.attack.kind == AttackKind::flooding) {
      config.attack.flooding.period_s = get_number(*attack, "period_s", "attack.flooding", 0.25);
      config.attack.flooding.claim_offset_m =
          get_number(*attack, "claim_offset_m", "attack.flooding", 25.0);
    }
  }

  if (const json* ids = find(root, "ids")) {
    check_keys(*ids, "ids",
               {"enabled", "epsilon_m", "rounds", "theta", "round_period_s", "monitor_6br",
                "cpu_cost_per_round", "rx_listen_per_round"});
    config.ids.enabled = get_bool(*ids, "enabled", "ids", false);
    config.ids.epsilon_m = get_number(*ids, "epsilon_m", "ids", 1.0);
    config.ids.window_rounds = static_cast<int>(get_int(*ids, "rounds", "ids", 10));
    config.ids.theta = get_number(*ids, "theta", "ids", 0.7);
    config.ids.round_period_s = get_number(*ids, "round_period_s", "ids", 10.0);
    config.ids.monitor_6br = get_bool(*ids, "monitor_6br", "ids", true);
    config.ids.cpu_cost_per_round =
        static_cast<std::uint64_t>(get_int(*ids, "cpu_cost_per_round", "ids", 1638));
    config.ids.rx_listen_per_round =
        static_cast<std::uint64_t>(get_int(*ids, "rx_listen_per_round", "ids", 3277));
  }

  config.powertrace_interval_s = get_number(root, "powertrace_interval_s", "scenario", 10.0);

  if (const json* battery = find(root, "battery")) {
    check_keys(*battery, "battery", {"capacity_mah", "voltage"});
    config.battery.capacity_mah = get_number(*battery, "capacity_mah", "battery", 2200.0);
    config.battery.voltage = get_number(*battery, "voltage", "battery", 3.0);
  }

  if (const json* energy = find(root, "energy")) {
    check_keys(*energy, "energy", {"cpu_ma", "lpm_ma", "tx_ma", "rx_ma", "volts"});
    config.energy.cpu_ma = get_number(*energy, "cpu_ma", "energy", 0.5);
    config.energy.lpm_ma = get_number(*energy, "lpm_ma", "energy", 0.0005);
    config.energy.tx_ma = get_number(*energy, "tx_ma", "energy", 17.4);
    config.energy.rx_ma = get_number(*energy, "rx_ma", "energy", 18.8);
    config.energy.volts = get_number(*energy, "volts", "energy", 3.0);
  }

  config.validate();
  return config;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("scenario: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string serialize_scenario(const ScenarioConfig& config) {
  json root;
  root["name"] = config.name;
  root["duration_s"] = config.duration_s;
  root["seed"] = config.seed;

  json list = json::array();
  for (const NodeEntry& node : config.nodes) {
    json entry;
    entry["id"] = node.id;
    entry["position"] = position_json(node.position);
    if (node.silent) entry["silent"] = true;
    list.push_back(entry);
  }
  root["nodes"] = json{{"list", list}};
  root["anchor"] = json{{"id", config.anchor_id}, {"position", position_json(config.anchor_position)}};
  if (config.border_router) root["border_router"] = *config.border_router;

  json traffic;
  traffic["mode"] = traffic_mode_name(config.traffic.mode);
  traffic["period_s"] = config.traffic.period_s;
  traffic["jitter_s"] = config.traffic.jitter_s;
  if (!config.traffic.peers.empty()) {
    json peers;
    for (const auto& [from, to] : config.traffic.peers) {
      peers[std::to_string(from)] = to;
    }
    traffic["peers"] = peers;
  }
  root["traffic"] = traffic;

  root["beacon"] = json{{"enabled", config.beacon.enabled},
                        {"period_s", config.beacon.period_s},
                        {"jitter_s", config.beacon.jitter_s}};

  root["environment"] = json{{"name", config.environment.name},
                             {"path_loss_exponent", config.environment.path_loss_exponent},
                             {"reference_loss_db", config.environment.reference_loss_db},
                             {"shadowing_sigma_db", config.environment.shadowing_sigma_db},
                             {"noise_floor_dbm", config.environment.noise_floor_dbm},
                             {"retransmission_bias", config.environment.retransmission_bias}};

  root["radio"] = json{{"tx_power_dbm", config.radio.tx_power_dbm},
                       {"rx_sensitivity_dbm", config.radio.rx_sensitivity_dbm}};

  json attack;
  attack["kind"] = attack_kind_name(config.attack.kind);
  if (!config.attack.attackers.empty()) attack["attackers"] = config.attack.attackers;
  if (config.attack.kind == AttackKind::wormhole) {
    attack["endpoints"] =
        json::array({config.attack.wormhole.endpoint_a, config.attack.wormhole.endpoint_b});
  }
  if (config.attack.kind == AttackKind::sybil) {
    attack["fake_count"] = config.attack.sybil.fake_count;
    if (!config.attack.sybil.forged_positions.empty()) {
      json forged = json::array();
      for (const Position& pos : config.attack.sybil.forged_positions) {
        forged.push_back(position_json(pos));
      }
      attack["forged_positions"] = forged;
    }
  }
  if (config.attack.kind == AttackKind::flooding) {
    attack["period_s"] = config.attack.flooding.period_s;
    attack["claim_offset_m"] = config.attack.flooding.claim_offset_m;
  }
  root["attack"] = attack;

  root["ids"] = json{{"enabled", config.ids.enabled},
                     {"epsilon_m", config.ids.epsilon_m},
                     {"rounds", config.ids.window_rounds},
                     {"theta", config.ids.theta},
                     {"round_period_s", config.ids.round_period_s},
                     {"monitor_6br", config.ids.monitor_6br},
                     {"cpu_cost_per_round", config.ids.cpu_cost_per_round},
                     {"rx_listen_per_round", config.ids.rx_listen_per_round}};

  root["powertrace_interval_s"] = config.powertrace_interval_s;
  root["battery"] =
      json{{"capacity_mah", config.battery.capacity_mah}, {"voltage", config.battery.voltage}};
  root["energy"] = json{{"cpu_ma", config.energy.cpu_ma},
                        {"lpm_ma", config.energy.lpm_ma},
                        {"tx_ma", config.energy.tx_ma},
                        {"rx_ma", config.energy.rx_ma},
                        {"volts", config.energy.volts}};

  return root.dump(2) + "\n";
}

ScenarioConfig paper_grid_scenario() {
  ScenarioConfig config;
  config.name = "paper-grid";
  config.duration_s = 600.0;
  config.seed = 1;
  const double spacing = 5.0 * kMetersPerFoot;  // 1.524 m
  NodeId id = 1;
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 4; ++col) {
      config.nodes.push_back(NodeEntry{id++, Position{col * spacing, row * spacing}, false});
    }
  }
  config.anchor_id = 9;
  // Grid centroid, expressed the way the shipped scenario file spells it.
  config.anchor_position = Position{7.5 * kMetersPerFoot, 2.5 * kMetersPerFoot};
  config.environment = lab_profile();
  return config;
}

ScenarioConfig wormhole_cluster_scenario() {
  ScenarioConfig config;
  config.name = "wormhole-cluster";
  config.duration_s = 600.0;
  config.seed = 1;
  // Two tight clusters far outside mutual radio range; the tunnel is the
  // only cross-cluster path.
  const double offset = 250.0;
  config.nodes = {
      NodeEntry{1, Position{0.0, 0.0}, false},
      NodeEntry{2, Position{1.5, 0.0}, false},
      NodeEntry{3, Position{0.0, 1.5}, false},
      NodeEntry{4, Position{1.5, 1.5}, false},
      NodeEntry{5, Position{offset, 0.0}, false},
      NodeEntry{6, Position{offset + 1.5, 0.0}, false},
      NodeEntry{7, Position{offset, 1.5}, false},
      NodeEntry{8, Position{offset + 1.5, 1.5}, false},
  };
  config.anchor_id = 9;
  config.anchor_position = Position{offset + 0.75, 0.75};
  config.environment = lab_profile();
  config.attack.kind = AttackKind::wormhole;
  config.attack.wormhole = WormholeConfig{2, 5};
  config.attack.attackers = {2, 5};
  config.ids.enabled = true;
  return config;
}

ScenarioConfig sybil_line_scenario() {
  ScenarioConfig config;
  config.name = "sybil-line";
  config.duration_s = 600.0;
  config.seed = 1;
  config.nodes = {
      NodeEntry{1, Position{-4.0, 0.0}, false}, NodeEntry{2, Position{-3.0, 0.0}, false},
      NodeEntry{3, Position{-2.0, 0.0}, false}, NodeEntry{4, Position{-1.0, 0.0}, false},
      NodeEntry{5, Position{1.0, 0.0}, false},  NodeEntry{6, Position{2.0, 0.0}, false},
      NodeEntry{7, Position{3.0, 0.0}, false},  NodeEntry{8, Position{4.0, 0.0}, false},
  };
  config.anchor_id = 9;
  config.anchor_position = Position{0.0, 0.0};
  config.environment = lab_profile();
  config.attack.kind = AttackKind::sybil;
  config.attack.attackers = {8};
  config.attack.sybil.fake_count = 5;
  config.ids.enabled = true;
  return config;
}

ScenarioConfig apply_condition(ScenarioConfig config, Condition condition) {
  const bool wants_attack =
      condition == Condition::attack || condition == Condition::attack_ids;
  if (wants_attack && config.attack.kind == AttackKind::none) {
    throw ValidationError(std::string("conditions: '") + condition_name(condition) +
                          "' requires the scenario to configure an attack");
  }
  if (!wants_attack) {
    config.attack = AttackConfig{};
  }
  config.ids.enabled =
      condition == Condition::attack_ids || condition == Condition::baseline_ids;
  config.validate();
  return config;
}

std::string condition_label(const ScenarioConfig& config) {
  const bool attacked = config.attack.kind != AttackKind::none;
  if (attacked) return config.ids.enabled ? "attack+ids" : "attack";
  return config.ids.enabled ? "baseline+ids" : "baseline";
}

ScenarioConfig truncate_nodes(ScenarioConfig config, int count) {
  if (count < 2) throw ValidationError("sweep: node count must be >= 2");
  if (count > static_cast<int>(config.nodes.size())) {
    throw ValidationError("sweep: node count " + std::to_string(count) +
                          " exceeds deployment capacity " + std::to_string(config.nodes.size()));
  }
  config.nodes.resize(static_cast<std::size_t>(count));
  config.traffic.peers.clear();  // ring order over the surviving nodes
  config.validate();
  return config;
}

std::string topology_digest(const ScenarioConfig& config) {
  std::vector<NodeEntry> sorted = config.nodes;
  std::sort(sorted.begin(), sorted.end(),
            [](const NodeEntry& a, const NodeEntry& b) { return a.id < b.id; });
  std::string digest;
  for (const NodeEntry& node : sorted) {
    digest += std::to_string(node.id) + "@" + shortest(node.position.x) + "," +
              shortest(node.position.y) + ";";
  }
  digest += "anchor" + std::to_string(config.anchor_id) + "@" +
            shortest(config.anchor_position.x) + "," + shortest(config.anchor_position.y);
  return digest;
}

}  // namespace motesim

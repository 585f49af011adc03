#include <doctest.h>

#include <string>

#include "motesim/errors.hpp"
#include "motesim/scenario.hpp"

using namespace motesim;

namespace {

std::string minimal_json(const std::string& extra = "") {
  std::string json = R"({
    "name": "t",
    "duration_s": 60,
    "seed": 1,
    "nodes": {"grid": {"rows": 1, "cols": 2, "spacing": "5 ft"}},
    "anchor": {"id": 9, "position": {"x": "0 m", "y": "1 m"}})";
  if (!extra.empty()) json += ",\n" + extra;
  json += "\n}";
  return json;
}

}  // namespace

TEST_CASE("length parsing accepts feet and meters only") {
  CHECK(parse_length_m("5 ft") == doctest::Approx(1.524).epsilon(1e-12));
  CHECK(parse_length_m("1.524 m") == doctest::Approx(1.524).epsilon(1e-12));
  CHECK(parse_length_m("2m") == 2.0);
  CHECK(parse_length_m("-3 m") == -3.0);
  CHECK_THROWS_AS(parse_length_m("5"), ValidationError);
  CHECK_THROWS_AS(parse_length_m("5 yd"), ValidationError);
  CHECK_THROWS_AS(parse_length_m("ft"), ValidationError);
}

TEST_CASE("bundled paper grid has the documented shape") {
  const ScenarioConfig config = paper_grid_scenario();
  config.validate();
  CHECK(config.nodes.size() == 8);
  CHECK(config.duration_s == 600.0);
  CHECK(config.anchor_id == 9);
  CHECK(config.nodes[1].position.x == doctest::Approx(1.524).epsilon(1e-12));
  CHECK(config.nodes[7].position.x == doctest::Approx(4.572).epsilon(1e-12));
  CHECK(config.nodes[7].position.y == doctest::Approx(1.524).epsilon(1e-12));
  CHECK(config.anchor_position.x == doctest::Approx(2.286).epsilon(1e-12));
  CHECK(config.anchor_position.y == doctest::Approx(0.762).epsilon(1e-12));
  CHECK(config.environment.name == "lab");
  CHECK(config.attack.kind == AttackKind::none);
  CHECK_FALSE(config.ids.enabled);
}

TEST_CASE("grid spacing in feet is stored in meters") {
  const ScenarioConfig config = parse_scenario(minimal_json());
  REQUIRE(config.nodes.size() == 2);
  CHECK(config.nodes[0].position.x == 0.0);
  CHECK(config.nodes[1].position.x == doctest::Approx(1.524).epsilon(1e-12));
}

TEST_CASE("serialize then load is the identity on validated configs") {
  for (const ScenarioConfig& config :
       {paper_grid_scenario(), wormhole_cluster_scenario(), sybil_line_scenario()}) {
    const std::string once = serialize_scenario(config);
    const ScenarioConfig reloaded = parse_scenario(once);
    CHECK(serialize_scenario(reloaded) == once);
  }
}

TEST_CASE("validation failures carry field paths") {
  CHECK_THROWS_WITH_AS(
      parse_scenario(minimal_json(R"("attack": {"kind": "wormhole", "endpoints": [1]})")),
      doctest::Contains("attack.wormhole"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_scenario(minimal_json(R"("duration_s": 0)")),
                       doctest::Contains("duration_s"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_scenario(minimal_json(R"("environment": "moon")")),
                       doctest::Contains("preset"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_scenario(minimal_json(
          R"("traffic": {"mode": "unicast", "peers": {"1": 7}})")),
      doctest::Contains("traffic.peers"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_scenario(minimal_json(R"("ids": {"theta": 1.5})")),
      doctest::Contains("ids.theta"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_scenario(minimal_json(R"("typo_field": 1)")),
                       doctest::Contains("typo_field"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_scenario(minimal_json(R"("border_router": 42)")),
                       doctest::Contains("border_router"), ValidationError);
}

TEST_CASE("single-node grids are rejected") {
  std::string json = R"({
    "name": "t", "duration_s": 60, "seed": 1,
    "nodes": {"grid": {"rows": 1, "cols": 1, "spacing": "5 ft"}},
    "anchor": {"id": 9, "position": {"x": "0 m", "y": "1 m"}}
  })";
  CHECK_THROWS_WITH_AS(parse_scenario(json), doctest::Contains("nodes"), ValidationError);
}

TEST_CASE("duplicate and colliding ids are rejected") {
  std::string json = R"({
    "name": "t", "duration_s": 60, "seed": 1,
    "nodes": {"list": [
      {"id": 1, "position": {"x": "0 m", "y": "0 m"}},
      {"id": 1, "position": {"x": "1 m", "y": "0 m"}}
    ]},
    "anchor": {"id": 9, "position": {"x": "0 m", "y": "1 m"}}
  })";
  CHECK_THROWS_WITH_AS(parse_scenario(json), doctest::Contains("duplicate"), ValidationError);

  std::string collide = R"({
    "name": "t", "duration_s": 60, "seed": 1,
    "nodes": {"grid": {"rows": 1, "cols": 2, "spacing": "5 ft"}},
    "anchor": {"id": 2, "position": {"x": "0 m", "y": "1 m"}}
  })";
  CHECK_THROWS_WITH_AS(parse_scenario(collide), doctest::Contains("anchor.id"), ValidationError);
}

TEST_CASE("malformed json is a validation error") {
  CHECK_THROWS_AS(parse_scenario("{not json"), ValidationError);
  CHECK_THROWS_AS(parse_scenario("[1, 2]"), ValidationError);
}

TEST_CASE("conditions rewrite attack and ids blocks") {
  ScenarioConfig config = paper_grid_scenario();
  config.attack.kind = AttackKind::flooding;

  const ScenarioConfig baseline = apply_condition(config, Condition::baseline);
  CHECK(baseline.attack.kind == AttackKind::none);
  CHECK_FALSE(baseline.ids.enabled);
  CHECK(condition_label(baseline) == "baseline");

  const ScenarioConfig attacked = apply_condition(config, Condition::attack);
  CHECK(attacked.attack.kind == AttackKind::flooding);
  CHECK_FALSE(attacked.ids.enabled);
  CHECK(condition_label(attacked) == "attack");

  const ScenarioConfig mitigated = apply_condition(config, Condition::attack_ids);
  CHECK(mitigated.ids.enabled);
  CHECK(condition_label(mitigated) == "attack+ids");

  const ScenarioConfig ids_only = apply_condition(config, Condition::baseline_ids);
  CHECK(ids_only.attack.kind == AttackKind::none);
  CHECK(ids_only.ids.enabled);
  CHECK(condition_label(ids_only) == "baseline+ids");
}

TEST_CASE("attack conditions require a configured attack") {
  const ScenarioConfig config = paper_grid_scenario();  // attack.kind = none
  CHECK_THROWS_AS(apply_condition(config, Condition::attack), ValidationError);
  CHECK_THROWS_AS(apply_condition(config, Condition::attack_ids), ValidationError);
}

TEST_CASE("condition names round trip") {
  for (Condition c : {Condition::baseline, Condition::attack, Condition::attack_ids,
                      Condition::baseline_ids}) {
    CHECK(condition_from_name(condition_name(c)) == c);
  }
  CHECK_THROWS_AS(condition_from_name("bogus"), ValidationError);
}

TEST_CASE("sweep truncation keeps the anchor and validates bounds") {
  const ScenarioConfig config = paper_grid_scenario();
  const ScenarioConfig small = truncate_nodes(config, 2);
  CHECK(small.nodes.size() == 2);
  CHECK(small.anchor_id == 9);
  CHECK_THROWS_AS(truncate_nodes(config, 1), ValidationError);
  CHECK_THROWS_AS(truncate_nodes(config, 9), ValidationError);
  CHECK(topology_digest(small) != topology_digest(config));
}

TEST_CASE("default attacker is the node nearest the centroid") {
  ScenarioConfig config = paper_grid_scenario();
  CHECK(config.resolved_attacker() == 2);
  config.attack.attackers = {7};
  CHECK(config.resolved_attacker() == 7);
}

TEST_CASE("unicast peers default to ring order") {
  const ScenarioConfig config = paper_grid_scenario();
  const std::map<NodeId, NodeId> peers = config.resolved_peers();
  CHECK(peers.at(1) == 2);
  CHECK(peers.at(8) == 1);
  CHECK(peers.size() == 8);
}

TEST_CASE("bundled detection scenarios validate") {
  wormhole_cluster_scenario().validate();
  sybil_line_scenario().validate();
  CHECK(wormhole_cluster_scenario().attack.kind == AttackKind::wormhole);
  CHECK(sybil_line_scenario().attack.kind == AttackKind::sybil);
  CHECK(sybil_line_scenario().attack.sybil.fake_count == 5);
}

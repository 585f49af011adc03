#include <doctest.h>

#include <string>

#include "motesim/errors.hpp"
#include "motesim/report.hpp"

using namespace motesim;

namespace {

RunReport tiny_report() {
  RunReport report;
  report.config = paper_grid_scenario();
  report.condition = "baseline";
  for (int snap = 1; snap <= 2; ++snap) {
    for (NodeId node : {1, 2}) {
      SnapshotRow row;
      row.time_s = 10.0 * snap;
      row.node = node;
      row.role = node == 1 ? Role::normal : Role::anchor;
      row.counters = {100ull * snap, 1000ull * snap, 10ull * snap, 20ull * snap};
      row.interval_energy_mj = 0.5;
      row.cumulative_energy_mj = 0.5 * snap;
      row.verdict = VerdictState::clean;
      row.suspicion_p = 0.0;
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace

TEST_CASE("fixed formatting uses six decimals and a dot separator") {
  CHECK(format_fixed(0.5) == "0.500000");
  CHECK(format_fixed(10.0) == "10.000000");
  CHECK(format_fixed(1.23456789) == "1.234568");
}

TEST_CASE("csv header and row shape are pinned") {
  const std::string csv = run_csv(tiny_report());
  CHECK(csv.rfind("time_s,node_id,role,cpu_ticks,lpm_ticks,tx_ticks,rx_ticks,"
                  "interval_energy_mj,cumulative_energy_mj,verdict_state,suspicion_p\n",
                  0) == 0);
  CHECK(csv.find("10.000000,1,normal,100,1000,10,20,0.500000,0.500000,clean,0.000000\n") !=
        std::string::npos);
  CHECK(csv.back() == '\n');
}

TEST_CASE("emitted csv re-parses to the same rows") {
  const RunReport report = tiny_report();
  const std::vector<SnapshotRow> rows = parse_run_csv(run_csv(report));
  REQUIRE(rows.size() == report.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].time_s == report.rows[i].time_s);
    CHECK(rows[i].node == report.rows[i].node);
    CHECK(rows[i].role == report.rows[i].role);
    CHECK(rows[i].counters == report.rows[i].counters);
    CHECK(rows[i].verdict == report.rows[i].verdict);
  }
}

TEST_CASE("csv parser rejects schema violations") {
  CHECK_THROWS_AS(parse_run_csv(""), ValidationError);
  CHECK_THROWS_AS(parse_run_csv("time_s,bogus\n"), ValidationError);

  const std::string good = run_csv(tiny_report());
  // wrong column count
  CHECK_THROWS_AS(parse_run_csv(good + "1.0,1,normal,1,2,3\n"), ValidationError);
  // bad type
  CHECK_THROWS_AS(
      parse_run_csv(good + "30.000000,1,normal,xyz,1,1,1,0.1,0.1,clean,0.0\n"),
      ValidationError);
  // unknown role / verdict
  CHECK_THROWS_AS(
      parse_run_csv(good + "30.000000,1,boss,1,1,1,1,0.1,0.1,clean,0.0\n"),
      ValidationError);
  // time must be monotone per node
  CHECK_THROWS_AS(
      parse_run_csv(good + "20.000000,1,normal,1,1,1,1,0.1,0.1,clean,0.0\n"),
      ValidationError);
}

TEST_CASE("verdict log lists victims with a stable separator") {
  RunReport report = tiny_report();
  VerdictEvent event;
  event.time_s = 100.0;
  event.node = 12;
  event.state = VerdictState::attacker;
  event.p = 1.0;
  event.victims = {9, 3};
  report.verdicts.push_back(event);
  const std::string csv = verdicts_csv(report);
  CHECK(csv.find("100.000000,12,attacker,1.000000,9|3\n") != std::string::npos);
}

TEST_CASE("comparison outputs cover every node and the network row") {
  EnergyReport a;
  a.condition = "baseline";
  a.seed = 1;
  a.duration_s = 600;
  a.topology_digest = "t";
  a.per_node = {{1, 10.0}, {2, 20.0}};
  a.network_total_mj = 30.0;
  EnergyReport b = a;
  b.condition = "attack";
  b.per_node = {{1, 15.0}, {2, 25.0}};
  b.network_total_mj = 40.0;

  const ComparisonSummary summary = compare_conditions({a, b});
  const std::string csv = comparison_csv(summary);
  CHECK(csv.find("baseline,1,10.000000\n") != std::string::npos);
  CHECK(csv.find("attack,network,40.000000\n") != std::string::npos);

  const std::string svg = comparison_svg(summary);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("baseline") != std::string::npos);
  CHECK(svg.find("attack") != std::string::npos);
  CHECK(svg.find("node 2") != std::string::npos);
}

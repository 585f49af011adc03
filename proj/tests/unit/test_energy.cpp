#include <doctest.h>

#include <cmath>

#include "motesim/energy.hpp"
#include "motesim/errors.hpp"
#include "motesim/mote.hpp"
#include "motesim/rng.hpp"

using namespace motesim;

namespace {

// Independent one-line evaluation of the accounting formula.
double oracle_mj(const PowertraceCounters& c) {
  return (c.cpu * 0.5 + c.lpm * 0.0005 + c.tx * 17.4 + c.rx * 18.8) / 32768.0 * 3.0;
}

}  // namespace

TEST_CASE("energy of zero counters is zero") {
  CHECK(energy_mj(PowertraceCounters{}, EnergyCoefficients{}) == 0.0);
}

TEST_CASE("single-state energies match hand evaluation") {
  const EnergyCoefficients k;
  CHECK(energy_mj({32768, 0, 0, 0}, k) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(energy_mj({0, 0, 0, 32768}, k) == doctest::Approx(56.4).epsilon(1e-12));
  CHECK(energy_mj({0, 0, 32768, 0}, k) == doctest::Approx(52.2).epsilon(1e-12));
}

TEST_CASE("energy matches the independent oracle on random counters") {
  const EnergyCoefficients k;
  RngStream rng(123, 1);
  for (int i = 0; i < 1000; ++i) {
    const PowertraceCounters c{rng.next_u64() % 20000000, rng.next_u64() % 20000000,
                               rng.next_u64() % 500000, rng.next_u64() % 500000};
    const double got = energy_mj(c, k);
    const double want = oracle_mj(c);
    CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("energy is additive in counters") {
  const EnergyCoefficients k;
  RngStream rng(321, 1);
  for (int i = 0; i < 1000; ++i) {
    const PowertraceCounters a{rng.next_u64() % 1000000, rng.next_u64() % 1000000,
                               rng.next_u64() % 100000, rng.next_u64() % 100000};
    const PowertraceCounters b{rng.next_u64() % 1000000, rng.next_u64() % 1000000,
                               rng.next_u64() % 100000, rng.next_u64() % 100000};
    const double whole = energy_mj(a + b, k);
    const double parts = energy_mj(a, k) + energy_mj(b, k);
    CHECK(std::abs(whole - parts) <= 1e-12 * std::max(1.0, std::abs(whole)));
  }
}

TEST_CASE("lifetime closed form") {
  const BatteryModel battery{2200.0, 3.0};
  CHECK(estimate_lifetime_hours(3.0, battery) == 2200.0);
  CHECK(estimate_lifetime_hours(6600.0, battery) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(estimate_lifetime_hours(0.0, battery), DomainError);
}

TEST_CASE("lifetime halves when power doubles and scales with capacity") {
  const BatteryModel battery{2200.0, 3.0};
  RngStream rng(99, 1);
  for (int i = 0; i < 20; ++i) {
    const double power = 0.01 + rng.uniform01() * 500.0;
    const double once = estimate_lifetime_hours(power, battery);
    const double twice = estimate_lifetime_hours(2.0 * power, battery);
    CHECK(std::abs(once / twice - 2.0) < 1e-12);
  }
  const BatteryModel doubled{4400.0, 3.0};
  CHECK(estimate_lifetime_hours(3.0, doubled) == doctest::Approx(4400.0).epsilon(1e-12));
}

TEST_CASE("battery and coefficient invariants") {
  CHECK_THROWS_AS(BatteryModel{0.0, 3.0}.validate(), ValidationError);
  CHECK_THROWS_AS(BatteryModel{2200.0, 0.0}.validate(), ValidationError);
  EnergyCoefficients k;
  k.rx_ma = 0.0;
  CHECK_THROWS_AS(k.validate(), ValidationError);
}

TEST_CASE("comparing identical reports gives zero deltas") {
  EnergyReport a;
  a.condition = "baseline";
  a.seed = 1;
  a.duration_s = 600;
  a.topology_digest = "t";
  a.per_node = {{1, 10.0}, {2, 20.0}};
  a.network_total_mj = 30.0;
  EnergyReport b = a;
  b.condition = "attack";

  const ComparisonSummary summary = compare_conditions({a, b});
  CHECK(summary.deltas.size() == 1);
  CHECK(summary.deltas[0].network_delta_mj == 0.0);
  for (const NodeEnergy& delta : summary.deltas[0].per_node_delta) {
    CHECK(delta.total_mj == 0.0);
  }
}

TEST_CASE("comparison rejects mismatched runs") {
  EnergyReport a;
  a.condition = "baseline";
  a.seed = 1;
  a.duration_s = 600;
  a.topology_digest = "four-node";
  a.per_node = {{1, 1.0}};
  EnergyReport b = a;
  b.condition = "attack";
  b.topology_digest = "eight-node";
  CHECK_THROWS_AS(compare_conditions({a, b}), ComparisonError);

  b = a;
  b.seed = 2;
  CHECK_THROWS_AS(compare_conditions({a, b}), ComparisonError);

  CHECK_THROWS_AS(compare_conditions({a}), ComparisonError);
}

TEST_CASE("comparison orders conditions by total") {
  EnergyReport base;
  base.seed = 1;
  base.duration_s = 600;
  base.topology_digest = "t";
  base.per_node = {{1, 1.0}};

  EnergyReport low = base;
  low.condition = "baseline";
  low.network_total_mj = 10.0;
  EnergyReport mid = base;
  mid.condition = "attack+ids";
  mid.network_total_mj = 15.0;
  EnergyReport high = base;
  high.condition = "attack";
  high.network_total_mj = 40.0;

  const ComparisonSummary summary = compare_conditions({low, high, mid});
  CHECK(summary.ordering ==
        std::vector<std::string>{"baseline", "attack+ids", "attack"});
}

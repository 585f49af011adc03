#include <doctest.h>

#include <vector>

#include "motesim/kernel.hpp"

using namespace motesim;

TEST_CASE("zero-delay event fires before later events") {
  Kernel kernel;
  std::vector<int> order;
  kernel.schedule(5, [&] { order.push_back(2); });
  kernel.schedule(0, [&] { order.push_back(1); });
  kernel.run_until(10);
  CHECK(order == std::vector<int>{1, 2});
}

TEST_CASE("same-tick events are delivered in insertion order") {
  Kernel kernel;
  std::vector<int> order;
  kernel.schedule(100, [&] { order.push_back(5); });
  kernel.schedule(100, [&] { order.push_back(6); });
  kernel.run_until(100);
  CHECK(order == std::vector<int>{5, 6});
}

TEST_CASE("scheduling in the past is rejected") {
  Kernel kernel;
  kernel.schedule(10, [] {});
  kernel.run_until(10);
  CHECK_THROWS_AS(kernel.schedule(9, [] {}), SchedulingError);
}

TEST_CASE("empty queue run advances time and processes nothing") {
  Kernel kernel;
  CHECK(kernel.run_until(1000) == 0);
  CHECK(kernel.now() == 1000);
}

TEST_CASE("run_until boundary includes events at end_tick") {
  Kernel kernel;
  int fired = 0;
  kernel.schedule(10, [&] { ++fired; });
  kernel.schedule(10, [&] { ++fired; });
  kernel.schedule(20, [&] { ++fired; });
  CHECK(kernel.run_until(15) == 2);
  CHECK(fired == 2);
  CHECK(kernel.now() == 15);
  CHECK(kernel.run_until(20) == 1);
}

TEST_CASE("run target behind the clock is rejected") {
  Kernel kernel;
  kernel.run_until(50);
  CHECK_THROWS_AS(kernel.run_until(49), SchedulingError);
}

TEST_CASE("cancelled events are skipped and not counted") {
  Kernel kernel;
  int fired = 0;
  const EventHandle handle = kernel.schedule(10, [&] { ++fired; });
  kernel.schedule(10, [&] { ++fired; });
  CHECK(kernel.cancel(handle));
  CHECK_FALSE(kernel.cancel(handle));
  CHECK(kernel.run_until(20) == 1);
  CHECK(fired == 1);
}

TEST_CASE("events scheduled while running are processed in the same pass") {
  Kernel kernel;
  std::vector<int> order;
  kernel.schedule(10, [&] {
    order.push_back(1);
    kernel.schedule(15, [&] { order.push_back(2); });
    kernel.schedule(kernel.now(), [&] { order.push_back(3); });
  });
  kernel.run_until(20);
  CHECK(order == std::vector<int>{1, 3, 2});
}

TEST_CASE("clock never runs backwards while processing") {
  Kernel kernel;
  Tick last = 0;
  bool monotone = true;
  for (Tick t : {30, 10, 20, 10, 5}) {
    kernel.schedule(t, [&, t] {
      if (kernel.now() < last) monotone = false;
      last = kernel.now();
      if (kernel.now() != t) monotone = false;
    });
  }
  kernel.run_until(100);
  CHECK(monotone);
}

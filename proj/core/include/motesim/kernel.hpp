#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <vector>

#include "motesim/errors.hpp"
#include "motesim/ticks.hpp"

namespace motesim {

using NodeId = std::int64_t;
inline constexpr NodeId kSystemTarget = -1;

struct EventHandle {
  std::uint64_t seq = 0;
};

// Single-threaded discrete-event scheduler. Events with equal fire_at are
// delivered in ascending insertion order, which makes runs fully
// reproducible for a fixed configuration and seed.
class Kernel {
 public:
  using Action = std::function<void()>;

  Tick now() const { return now_; }

  // Queues an event. fire_at must not precede the current tick.
  EventHandle schedule(Tick fire_at, Action action, NodeId target = kSystemTarget);

  // Removes a pending event. Returns false if already fired or cancelled.
  bool cancel(EventHandle handle);

  // Processes every event with fire_at <= end_tick in (fire_at, seq) order,
  // then advances the clock to end_tick. Returns the number processed.
  std::uint64_t run_until(Tick end_tick);

  std::uint64_t events_processed() const { return processed_; }
  std::size_t pending() const { return actions_.size(); }

 private:
  struct QueueKey {
    Tick fire_at;
    std::uint64_t seq;
    bool operator>(const QueueKey& o) const {
      if (fire_at != o.fire_at) return fire_at > o.fire_at;
      return seq > o.seq;
    }
  };

  Tick now_ = 0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t processed_ = 0;
  std::priority_queue<QueueKey, std::vector<QueueKey>, std::greater<>> queue_;
  std::map<std::uint64_t, Action> actions_;
};

}  // namespace motesim

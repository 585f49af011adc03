#include "motesim/kernel.hpp"

#include <utility>

namespace motesim {

EventHandle Kernel::schedule(Tick fire_at, Action action, NodeId /*target*/) {
  if (fire_at < now_) {
    throw SchedulingError("event deadline " + std::to_string(fire_at) +
                          " precedes current tick " + std::to_string(now_));
  }
  const std::uint64_t seq = next_seq_++;
  queue_.push(QueueKey{fire_at, seq});
  actions_.emplace(seq, std::move(action));
  return EventHandle{seq};
}

bool Kernel::cancel(EventHandle handle) {
  return actions_.erase(handle.seq) > 0;
}

std::uint64_t Kernel::run_until(Tick end_tick) {
  if (end_tick < now_) {
    throw SchedulingError("run target " + std::to_string(end_tick) +
                          " precedes current tick " + std::to_string(now_));
  }
  std::uint64_t count = 0;
  while (!queue_.empty() && queue_.top().fire_at <= end_tick) {
    const QueueKey key = queue_.top();
    queue_.pop();
    auto it = actions_.find(key.seq);
    if (it == actions_.end()) continue;  // cancelled
    Action action = std::move(it->second);
    actions_.erase(it);
    now_ = key.fire_at;
    action();
    ++count;
    ++processed_;
  }
  now_ = end_tick;
  return count;
}

}  // namespace motesim

#include "motesim/ticks.hpp"

#include <cmath>

#include "motesim/errors.hpp"

namespace motesim {

Tick ticks_from_seconds(double seconds) {
  if (!std::isfinite(seconds) || seconds < 0.0) {
    throw DomainError("duration must be a finite non-negative number of seconds");
  }
  return static_cast<Tick>(std::floor(seconds * static_cast<double>(kTicksPerSecond) + 0.5));
}

std::int64_t tick_offset_from_seconds(double seconds) {
  if (!std::isfinite(seconds)) {
    throw DomainError("offset must be finite");
  }
  return static_cast<std::int64_t>(std::floor(seconds * static_cast<double>(kTicksPerSecond) + 0.5));
}

}  // namespace motesim

#pragma once

#include <cstdint>

namespace motesim {

// Simulation time unit. One tick is 1/32768 s, matching the rtimer rate of
// MSP430-class motes and the divisor of the energy accounting.
using Tick = std::uint64_t;

inline constexpr Tick kTicksPerSecond = 32768;

// Converts a non-negative duration in seconds to ticks, rounding half-up.
// Throws DomainError for negative or non-finite input.
Tick ticks_from_seconds(double seconds);

// Signed tick offset (used for jitter), rounding half-up.
std::int64_t tick_offset_from_seconds(double seconds);

inline double seconds_from_ticks(Tick ticks) {
  return static_cast<double>(ticks) / static_cast<double>(kTicksPerSecond);
}

}  // namespace motesim

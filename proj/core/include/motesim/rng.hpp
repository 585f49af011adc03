#pragma once

#include <cstdint>

namespace motesim {

// Stream purposes. Each (node, purpose) pair owns an independent stream so
// that enabling the IDS or an attack never shifts the draws used by traffic.
enum class RngPurpose : std::uint64_t {
  shadowing = 1,   // per-receiver radio shadowing noise
  app_jitter = 2,  // traffic and beacon jitter
  attack = 3,      // attack timing and forged-position draws
  link = 4,        // per-frame retransmission draws
};

// Deterministic, platform-independent PRNG (xoshiro256++ seeded via
// splitmix64). The standard-library distributions are not bit-portable
// across implementations, so the few distributions needed are built in.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);
  RngStream(std::uint64_t seed, std::uint64_t node_id, RngPurpose purpose);

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01();
  double uniform(double lo, double hi);

  // Box-Muller; draws nothing when sigma <= 0.
  double normal(double mean, double sigma);

  // Number of successes of (u < p) before the first failure:
  // P(k) = (1 - p) * p^k for p in [0, 1).
  int geometric(double p);

 private:
  std::uint64_t s_[4];
};

// FNV-1a over a label, used to derive stable stream ids.
std::uint64_t hash_label(const char* label);

}  // namespace motesim

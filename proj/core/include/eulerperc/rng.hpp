#pragma once

#include <cstdint>
#include <random>

namespace eulerperc {

/// SplitMix64 finalizer. A bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Child seed for worker/chain `stream_id` of a run seeded with `master_seed`.
///
/// The mapping is frozen: child = mix64(master + (id + 1) * 0x9e3779b97f4a7c15).
/// For a fixed master the map id -> child is injective (odd multiplier, then a
/// bijective finalizer), so distinct streams never share a seed.
constexpr std::uint64_t seed_stream(std::uint64_t master_seed, std::uint64_t stream_id) {
  return mix64(master_seed + (stream_id + 1) * 0x9e3779b97f4a7c15ULL);
}

/// Deterministic random source. Uniform variates are derived from the raw
/// engine output directly so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eulerperc

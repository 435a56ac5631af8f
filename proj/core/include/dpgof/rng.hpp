// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace dpgof {

// Deterministic pseudo-random stream. Streams are derived from a master seed
// plus up to three stream-identifier words, so any unit of work keyed by
// (seed, id...) sees the same stream no matter which thread runs it or in
// which order. Generator: xoshiro256++ seeded through SplitMix64.
class RngStream {
 public:
  static RngStream derive(std::uint64_t master_seed, std::uint64_t id0 = 0,
                          std::uint64_t id1 = 0, std::uint64_t id2 = 0) {
    std::uint64_t key = mix64(master_seed + 0x9E3779B97F4A7C15ULL);
    key = mix64(key ^ (id0 * 0xBF58476D1CE4E5B9ULL + 0x52DCE729ULL));
    key = mix64(key ^ (id1 * 0x94D049BB133111EBULL + 0x38495AB5ULL));
    key = mix64(key ^ (id2 * 0x2545F4914F6CDD1DULL + 0x6A09E667ULL));
    RngStream r;
    std::uint64_t sm = key;
    for (auto& word : r.state_) word = splitmix_next(sm);
    if ((r.state_[0] | r.state_[1] | r.state_[2] | r.state_[3]) == 0) r.state_[0] = 1;
    return r;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Unbiased uniform integer in [0, bound), bound >= 1. A single-valued range
  // consumes no randomness, so degenerate perturbations leave streams aligned
  // with their unperturbed counterparts.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t x = next_u64();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = next_u64();
        m = static_cast<unsigned __int128>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  RngStream() = default;

  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  static std::uint64_t splitmix_next(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    return mix64(s);
  }
  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace dpgof

#pragma once

#include <cstdint>

namespace dynmpc {

// splitmix64. Used everywhere randomness is needed so that runs are
// reproducible bit-for-bit across platforms (std::uniform_int_distribution
// is implementation-defined and unusable for that).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64(state_); }

  // Uniform in [0, bound) by rejection; deterministic for a given seed.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1; mask |= mask >> 2; mask |= mask >> 4;
    mask |= mask >> 8; mask |= mask >> 16; mask |= mask >> 32;
    for (;;) {
      std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }

  bool coin() { return next() & 1; }

  // Probability p expressed as num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
  std::uint64_t state_;
};

// Stateless hash of a key tuple, for decisions that must be recomputable
// on any machine without communication (e.g. contraction coin flips keyed
// by (iteration, component)).
inline std::uint64_t mix_hash(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b + 0x7f4a7c15ULL);
  return splitmix64(s);
}

} // namespace dynmpc

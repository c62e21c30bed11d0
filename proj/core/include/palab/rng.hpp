#pragma once

#include <array>
#include <cstdint>

namespace palab {

/// splitmix64 finalizer (Steele, Lea, Flood / Vigna). Bijective on uint64.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// splitmix64 stream; used for seeding the main generator.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256++ (Blackman & Vigna, 2019), state expanded from the seed with
/// splitmix64. Pinned here so results reproduce across implementations:
/// uniform doubles are (next() >> 11) * 2^-53, i.e. 53-bit mantissas in [0,1).
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : state_) word = sm.next();
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next() {
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

  /// Uniform in [0,1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [0, bound); unbiased by rejection. bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

/// Master seed for a whole experiment; per-trial streams are derived from it
/// so the trial -> stream map is stable under reordering and parallelism.
struct Seed {
  std::uint64_t master = 1;
};

/// trial_seed = mix64(master ^ mix64(trial + golden)). Distinct trials give
/// distinct seeds for a fixed master (mix64 is a bijection).
constexpr std::uint64_t trial_seed(Seed seed, std::uint64_t trial) {
  return mix64(seed.master ^ mix64(trial + 0x9e3779b97f4a7c15ULL));
}

inline Xoshiro256pp trial_rng(Seed seed, std::uint64_t trial) {
  return Xoshiro256pp(trial_seed(seed, trial));
}

/// Tagged sub-stream of a trial (e.g. victim sampling inside a probe), kept
/// separate from the point-generation stream.
inline Xoshiro256pp trial_rng(Seed seed, std::uint64_t trial, std::uint64_t tag) {
  return Xoshiro256pp(mix64(trial_seed(seed, trial) ^ mix64(tag)));
}

}  // namespace palab

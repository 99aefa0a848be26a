// Deterministic random number generation.  An Rng is an mt19937_64 engine
// plus hand-rolled uniform and normal draws, so a (seed, call sequence) pair
// reproduces the same doubles on any build using the same standard library.
//
// Suites derive one seed per (cell, trial) with derive_seed below; replaying
// a recorded seed regenerates the trial's inputs exactly.
#pragma once

#include <cstdint>
#include <random>

#include "mazurlab/algebra.hpp"

namespace mazurlab {

// splitmix64 finalizer: the fixed 64-bit mixing function used everywhere a
// seed is derived from counters.
inline uint64_t mix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Per-trial seed: two mixing rounds over (base, cell, trial) counters.
inline uint64_t derive_seed(uint64_t base, uint64_t cell, uint64_t trial) {
  return mix64(mix64(base + 0x9E3779B97F4A7C15ull * (cell + 1)) +
               0xC2B2AE3D27D4EB4Full * (trial + 1));
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]: never returns zero, safe under log.
  double uniform_pos() { return 1.0 - uniform01(); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Log-uniform on [lo, hi], 0 < lo <= hi.  lo == hi returns the point mass.
  double log_uniform(double lo, double hi);

  // Standard normal via Box-Muller (pairs cached).
  double normal();

  // Complex Gaussian with independent standard normal real and imaginary
  // parts.
  cplx cnormal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace mazurlab

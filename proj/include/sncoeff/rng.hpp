#pragma once

#include <cstdint>
#include <random>

namespace sncoeff {

// Derives an independent stream seed from a master seed and a stream index.
// splitmix64 finalizer over master + index * golden-gamma; decorrelates
// adjacent indices so per-sample streams never overlap in practice.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + index * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Thin deterministic wrapper over mt19937_64. uniform() maps the top 53 bits
// to [0, 1) the same way on every platform; no distribution objects, whose
// output is not pinned down by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, bound). Rejection-free modulo is fine here: bound
  // is always tiny compared to 2^64, the bias is far below anything a
  // statistical check in this project could see.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sncoeff

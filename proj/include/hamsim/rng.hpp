#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hamsim {

// splitmix64 finalizer. Used for seed mixing and key hashing so that results
// do not depend on the platform's std::hash.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream seed for task `index` under a base seed. Results are
// reproducible regardless of how tasks are scheduled.
inline uint64_t derive_seed(uint64_t base, uint64_t index) {
  return splitmix64(splitmix64(base) + index + 1);
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// mt19937_64 with fixed-output helpers (std::uniform_*_distribution is
// implementation-defined, which would break cross-toolchain determinism).
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  // [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // [0, n)
  uint64_t bounded(uint64_t n) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(gen_()) * n) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace hamsim

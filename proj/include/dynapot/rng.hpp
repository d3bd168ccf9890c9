#pragma once

// Counter-based (stateless) random stream: the k-th draw of stream (seed, sub)
// is a pure function of (seed, sub, k), so parallel sub-chains with recorded
// sub-seeds reproduce bit-identically in any interleaving.

#include <cstdint>

namespace dynapot {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct CounterRng {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  std::uint64_t at(std::uint64_t counter) const {
    std::uint64_t h = splitmix64(seed ^ splitmix64(stream));
    return splitmix64(h ^ splitmix64(counter + 0x243f6a8885a308d3ULL));
  }
  // Uniform in [0, n), n > 0; modulo bias is < n / 2^64, irrelevant here.
  std::uint64_t uniform(std::uint64_t counter, std::uint64_t n) const { return at(counter) % n; }
  // Uniform double in [0, 1).
  double uniform01(std::uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }
};

}  // namespace dynapot

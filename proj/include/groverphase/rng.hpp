#pragma once

#include <cstdint>

namespace groverphase {

/// splitmix64 step; used to derive independent sub-stream seeds so that
/// parallel sweeps stay deterministic regardless of scheduling.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b) {
  std::uint64_t s = base;
  splitmix64(s);
  s ^= 0x632be59bd9b4e019ULL * (a + 1);
  splitmix64(s);
  s ^= 0x9e6c63d0876a9a47ULL * (b + 1);
  return splitmix64(s);
}

/// Deterministic uniform draws in [0, 1) from any 64-bit generator; avoids
/// std::uniform_real_distribution, whose output is implementation-defined.
template <class Rng>
double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class Rng>
double uniform_range(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

}  // namespace groverphase

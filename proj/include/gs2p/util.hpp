#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace gs2p {

// splitmix64 step; used to derive independent sub-seeds from a base seed so
// pipeline stages do not share RNG streams.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t tag) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Shortest decimal form that round-trips an IEEE754 double (17 significant digits).
std::string format_double(double v);

}  // namespace gs2p

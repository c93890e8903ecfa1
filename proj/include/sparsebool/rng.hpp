#pragma once

#include <cstdint>
#include <random>

namespace sparsebool {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Per-trial seed. For a fixed master seed the map trial -> seed is a
/// composition of bijections, so distinct trials never collide.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial) {
  return mix64(mix64(trial + 0x9e3779b97f4a7c15ULL) ^ master);
}

inline Rng trial_rng(std::uint64_t master, std::uint64_t trial) { return Rng(derive_seed(master, trial)); }

/// Uniform integer in [0, bound).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

}  // namespace sparsebool

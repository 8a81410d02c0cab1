#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace latmed {

using Rng = std::mt19937_64;

/// splitmix64 step; used to derive independent per-case seeds from a
/// config seed so parallel execution stays reproducible.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform integer in [lo, hi], stdlib-independent so seeded runs give the
/// same stream everywhere.
inline long long next_int(Rng& rng, long long lo, long long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<long long>(v % span);
}

/// Uniform double in [lo, hi).
inline double next_real(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

/// Thread count for suite parallelism: LATTICEMED_THREADS, 0 or unset = auto.
std::size_t worker_count();

/// Runs fn(i) for i in [0, n) across worker_count() threads. Callers make
/// results deterministic by writing into index i of a pre-sized buffer.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace latmed

#pragma once

#include <cstdint>

#include "dikeopt/instance.hpp"

namespace dikeopt {

enum class InstanceFamily {
  // Separable costs plus a supermodular bump, damage with decreasing
  // differences: provably satisfies conditions (i), (ii), (iii).
  monge,
  // Unrestricted non-negative decimal tables, for stress and oracle tests.
  random,
  // Like monge, but alternate segments carry the opposite damage direction,
  // so each segment satisfies exactly one branch of (i') and rounding must
  // flip its pairing per segment.
  mixed,
};

struct GenDims {
  int horizon = 2;
  int segments = 1;
  int dikeLevels = 2;
  int barrierLevels = 2;
};

// Deterministic instance from the seed: the same (seed, dims, family)
// always serializes to the identical byte string. Period-0 tables are all
// zero. Throws Error(DimsTooLarge) beyond sane caps.
Instance gen_instance(std::uint64_t seed, const GenDims& dims, InstanceFamily family);

InstanceFamily family_from_string(const std::string& name);  // throws Error(IoError)

// The generator's PRNG, exposed for tests that need reproducible draws.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace dikeopt

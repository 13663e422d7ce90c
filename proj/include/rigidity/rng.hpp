#pragma once

#include <cstdint>
#include <random>

#include "rigidity/rational.hpp"

namespace rigidity {

// Derives an independent stream seed from a base seed and a stream tag, so
// that sub-computations stay reproducible when run in any order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Random rational test point: integers 1..10007 scaled by 1/1009. Large
// enough range that accidental rank drops are vanishingly unlikely.
inline Rat random_test_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(1, 10007);
  return Rat(d(rng), 1009);
}

}  // namespace rigidity

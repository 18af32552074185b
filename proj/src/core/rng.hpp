// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace triad {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic child seed for stream `n` of a base seed. One command-line
// seed fans out through this, so each consumer draws independently of
// evaluation order elsewhere.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n) {
  std::uint64_t s = base;
  std::uint64_t z = splitmix64(s);
  s ^= n * 0xd1342543de82ef95ULL;
  z ^= splitmix64(s);
  return z;
}

// Seedable generator with portable output: mt19937_64 for the raw stream,
// 53-bit mantissa uniforms, Box-Muller normals. No std::*_distribution is
// used anywhere (their output is implementation-defined), so identical
// seeds reproduce identical ensembles on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform01() { return double(gen_() >> 11) * 0x1.0p-53; }

  // (0, 1]; safe to feed std::log
  double uniform_pos() { return double((gen_() >> 11) + 1) * 0x1.0p-53; }

  // [0, n)
  std::uint64_t uniform_int(std::uint64_t n) {
    return std::uint64_t((static_cast<unsigned __int128>(gen_()) * n) >> 64);
  }

  // Re and Im independent standard normals.
  std::complex<double> complex_gaussian() {
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double phi = 2.0 * std::numbers::pi * uniform01();
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  double gaussian() { return complex_gaussian().real(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace triad

#pragma once

// Seeded random number generation with reproducible draws.
//
// std::uniform_*_distribution is implementation-defined, so every draw here
// goes through fixed bit-level conversions on top of mt19937_64. A master
// seed expands into independent per-purpose streams via derive_seed(); the
// rule is frozen so that changing one experiment knob never reseeds another.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace autolab {

// splitmix64 step; also the seed-mixing primitive used by derive_seed.
std::uint64_t splitmix64(std::uint64_t& state);

// Stream seed for a named purpose: fnv1a(tag) mixed into the master seed
// with two splitmix64 rounds.
std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform();
  // Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  // Uniform integer in [0, n), unbiased (rejection sampling). n >= 1.
  std::uint64_t uniform_int(std::uint64_t n);
  // Bernoulli with success probability p.
  bool bernoulli(double p);

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace autolab

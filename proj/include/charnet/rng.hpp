#pragma once

#include <cstdint>
#include <vector>

namespace charnet {

// xoshiro256** (Blackman & Vigna), seeded through SplitMix64. All random
// draws in the project go through this generator so that a (params, seed)
// pair reproduces the same output run after run. Reproducibility is
// guaranteed within this implementation, not across languages.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();

  // Uniform integer in [0, bound), bound > 0. Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double unit();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t s_[4];
};

// Splittable per-sample seed: hash(seed, index) via SplitMix64. Batch
// generation derives one seed per sample so samples are independent and
// order of generation does not matter.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace charnet

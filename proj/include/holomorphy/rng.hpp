#pragma once

#include <cstdint>

namespace holomorphy {

// splitmix64. Sampled checks draw from this instead of <random> so that
// reports for a fixed seed are byte-stable across platforms and compilers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Draw in [0, bound). Modulo bias is irrelevant at the table sizes we
  // sample (bound is tiny next to 2^64) and keeping it branchless keeps the
  // stream position independent of bound.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace holomorphy

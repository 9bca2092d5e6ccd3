#pragma once

#include <cstdint>
#include <random>

namespace kgx {

// Seeded generator with hand-rolled bounded sampling. std::mt19937_64 has a
// standard-specified sequence but the standard distributions do not, so
// bounded draws go through rejection sampling to keep outputs byte-identical
// across platforms and library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace kgx

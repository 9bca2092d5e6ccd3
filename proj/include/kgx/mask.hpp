#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace kgx {

// Hard cap on ground-set size / hypergraph vertex count for bitmask-backed
// search. Documented in the CLI help.
inline constexpr int kMaxGroundSize = 128;

// Fixed-width bitmask over labels or vertex indices (0-based bits).
// Disjointness of set-system members reduces to an intersection test.
struct LabelMask {
  std::array<std::uint64_t, 2> w{0, 0};

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  bool empty() const { return (w[0] | w[1]) == 0; }
  bool intersects(const LabelMask& o) const {
    return ((w[0] & o.w[0]) | (w[1] & o.w[1])) != 0;
  }
  LabelMask operator|(const LabelMask& o) const {
    return LabelMask{{w[0] | o.w[0], w[1] | o.w[1]}};
  }
  LabelMask operator&(const LabelMask& o) const {
    return LabelMask{{w[0] & o.w[0], w[1] & o.w[1]}};
  }
  bool operator==(const LabelMask&) const = default;
};

struct LabelMaskHash {
  std::size_t operator()(const LabelMask& m) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t word : m.w) {
      h ^= word;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace kgx

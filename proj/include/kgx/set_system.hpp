#pragma once

#include <string>
#include <vector>

#include "kgx/mask.hpp"

namespace kgx {

// One member of a set system: distinct 1-based labels, kept sorted ascending.
struct Subset {
  std::vector<int> labels;
  bool operator==(const Subset&) const = default;
};

// Canonical member order: by cardinality, then lexicographic. Makes every
// serialization byte-reproducible.
bool canonical_subset_less(const Subset& a, const Subset& b);

enum class StabilityKind { Stable, AlmostStable };

// A duplicate-free family of nonempty subsets of [ground_size], members in
// canonical order.
struct SetSystem {
  int ground_size = 0;
  std::vector<Subset> members;
  int duplicates_collapsed = 0;  // dropped during canonicalization

  bool operator==(const SetSystem& o) const {
    return ground_size == o.ground_size && members == o.members;
  }
};

// Guard for the generated-family constructors.
inline constexpr std::uint64_t kMaxMembers = 2'000'000;

// Validates labels against [1, ground_size], sorts each member, collapses
// duplicate members and canonicalizes the order. Empty members and
// out-of-range labels are errors.
SetSystem make_set_system(int ground_size, std::vector<Subset> members);

// All k-subsets of [n] in canonical order.
SetSystem complete_k_subsets(int n, int k);

// Every distinct pair i, j satisfies s <= |i-j| <= n-s. Singletons pass
// vacuously.
bool is_s_stable(const Subset& sigma, int n, int s);

// Lower bound only: every distinct pair satisfies s <= |i-j|.
bool is_almost_s_stable(const Subset& sigma, int n, int s);

// Sub-system of the members passing the chosen predicate; ground size kept.
SetSystem filter_part(const SetSystem& f, int s, StabilityKind kind);

// All 2-subsets of [n] that are not r-stable.
SetSystem family_fnr(int n, int r);

// On n = r(2r-1): family_fnr(n, r) together with the step-r pair cycle
// {1+ir, 1+(i+1)r} for i = 0..2r-3 and the closing pair {(2r-2)r+1, 1}.
SetSystem family_prop2(int r);

// The step-r pairs family_prop2 adds; they are exactly its r-stable part.
std::vector<Subset> prop2_added_pairs(int r);

LabelMask subset_mask(const Subset& s);
std::vector<LabelMask> member_masks(const SetSystem& f);

// Saturating binomial coefficient, capped at UINT64_MAX.
std::uint64_t binomial(int n, int k);

}  // namespace kgx

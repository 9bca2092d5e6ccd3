#include "kgx/set_system.hpp"

#include <algorithm>
#include <cstdlib>

#include "kgx/limits.hpp"

namespace kgx {

bool canonical_subset_less(const Subset& a, const Subset& b) {
  if (a.labels.size() != b.labels.size())
    return a.labels.size() < b.labels.size();
  return a.labels < b.labels;
}

SetSystem make_set_system(int ground_size, std::vector<Subset> members) {
  if (ground_size < 1) throw Error("ground size must be positive");
  if (ground_size > kMaxGroundSize)
    throw CapExceeded("ground size " + std::to_string(ground_size) +
                      " exceeds supported maximum " +
                      std::to_string(kMaxGroundSize));
  for (Subset& s : members) {
    if (s.labels.empty()) throw Error("empty member");
    std::sort(s.labels.begin(), s.labels.end());
    for (std::size_t i = 0; i < s.labels.size(); ++i) {
      int v = s.labels[i];
      if (v < 1 || v > ground_size)
        throw Error("label " + std::to_string(v) + " out of range [1," +
                    std::to_string(ground_size) + "]");
      if (i > 0 && s.labels[i - 1] == v)
        throw Error("repeated label " + std::to_string(v) + " in member");
    }
  }
  std::sort(members.begin(), members.end(), canonical_subset_less);
  const std::size_t before = members.size();
  members.erase(std::unique(members.begin(), members.end()), members.end());

  SetSystem out;
  out.ground_size = ground_size;
  out.members = std::move(members);
  out.duplicates_collapsed = static_cast<int>(before - out.members.size());
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n-k+i) / i, watching for overflow
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (result > UINT64_MAX / num) return UINT64_MAX;
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

SetSystem complete_k_subsets(int n, int k) {
  if (n < 1) throw Error("n must be positive");
  if (k < 1) throw Error("k must be positive");
  if (k > n) throw Error("k exceeds n");
  if (n > kMaxGroundSize)
    throw CapExceeded("ground size exceeds supported maximum");
  if (binomial(n, k) > kMaxMembers)
    throw CapExceeded("C(n,k) exceeds the member cap");

  SetSystem out;
  out.ground_size = n;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.members.push_back(Subset{cur});
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool is_s_stable(const Subset& sigma, int n, int s) {
  for (std::size_t i = 0; i < sigma.labels.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.labels.size(); ++j) {
      const int d = std::abs(sigma.labels[i] - sigma.labels[j]);
      if (d < s || d > n - s) return false;
    }
  return true;
}

bool is_almost_s_stable(const Subset& sigma, int n, int s) {
  for (std::size_t i = 0; i < sigma.labels.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.labels.size(); ++j)
      if (std::abs(sigma.labels[i] - sigma.labels[j]) < s) return false;
  return true;
}

SetSystem filter_part(const SetSystem& f, int s, StabilityKind kind) {
  if (s < 1) throw Error("s must be positive");
  SetSystem out;
  out.ground_size = f.ground_size;
  for (const Subset& m : f.members) {
    const bool keep = kind == StabilityKind::Stable
                          ? is_s_stable(m, f.ground_size, s)
                          : is_almost_s_stable(m, f.ground_size, s);
    if (keep) out.members.push_back(m);
  }
  return out;
}

SetSystem family_fnr(int n, int r) {
  if (n < 2) throw Error("n must be at least 2");
  if (r < 2) throw Error("r must be at least 2");
  SetSystem pairs = complete_k_subsets(n, 2);
  SetSystem out;
  out.ground_size = n;
  for (const Subset& m : pairs.members)
    if (!is_s_stable(m, n, r)) out.members.push_back(m);
  return out;
}

std::vector<Subset> prop2_added_pairs(int r) {
  std::vector<Subset> added;
  for (int i = 0; i <= 2 * r - 3; ++i)
    added.push_back(Subset{{1 + i * r, 1 + (i + 1) * r}});
  added.push_back(Subset{{1, (2 * r - 2) * r + 1}});
  return added;
}

SetSystem family_prop2(int r) {
  if (r < 2) throw Error("r must be at least 2");
  const int n = r * (2 * r - 1);
  SetSystem base = family_fnr(n, r);
  std::vector<Subset> members = base.members;
  for (Subset& p : prop2_added_pairs(r)) members.push_back(std::move(p));
  return make_set_system(n, std::move(members));
}

LabelMask subset_mask(const Subset& s) {
  LabelMask m;
  for (int v : s.labels) m.set(v - 1);
  return m;
}

std::vector<LabelMask> member_masks(const SetSystem& f) {
  std::vector<LabelMask> out;
  out.reserve(f.members.size());
  for (const Subset& m : f.members) out.push_back(subset_mask(m));
  return out;
}

}  // namespace kgx

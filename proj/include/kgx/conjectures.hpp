#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kgx/coloring.hpp"
#include "kgx/defect.hpp"
#include "kgx/limits.hpp"
#include "kgx/rng.hpp"
#include "kgx/set_system.hpp"

namespace kgx {

// chi(KG^2(C(n,k))) = n - 2(k-1) for n >= 2k.
int lovasz_value(int n, int k);

// chi(KG^r(C(n,k))) = ceil((n - r(k-1)) / (r-1)) for n >= rk, r >= 2.
int afl_bound(int n, int k, int r);

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

enum class Verdict { Satisfied, Violated };
enum class GapVariant { FrickStable, WeakAlmostStable };

// One side-by-side evaluation of chi(KG^r(part)) against
// ceil(cd_r(F) / (r-1)). Violated iff lhs < rhs.
struct GapReport {
  std::string family;
  int r = 0;
  GapVariant variant = GapVariant::FrickStable;
  int lhs_chi = 0;
  int rhs = 0;
  int cd = 0;
  Verdict verdict = Verdict::Satisfied;
  bool exploratory_r2 = false;  // stable variant is stated for r >= 3 only
  ColoringCertificate chi_certificate;
  DefectCertificate defect_certificate;
};

GapReport frick_gap(const SetSystem& f, int r, const EngineLimits& limits = {},
                    std::string family_name = "");
GapReport weak_gap(const SetSystem& f, int r, const EngineLimits& limits = {},
                   std::string family_name = "");

enum class Relation { Equal, Less, Greater };

// chi(KG^r(C(n,k)_r-stab)) compared against afl_bound(n, k, r).
struct ZieglerReport {
  int n = 0, k = 0, r = 0;
  int chi = 0;
  int bound = 0;
  Relation relation = Relation::Equal;
  ColoringCertificate certificate;
};

ZieglerReport ziegler_check(int n, int k, int r, const EngineLimits& limits = {});

struct Check {
  std::string name;
  bool passed = false;
  std::string details;
};

struct VerifyReport {
  std::string title;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, long long>> values;

  bool all_passed() const {
    for (const Check& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// With n = kr+1: cd_r(family_fnr(n,r)) = 1, its r-stable part is empty,
// chi of the Kneser hypergraph over that part is 0, and the explicit
// remove-vertex-n certificate (color i for labels i, i+r, ..., i+(k-1)r)
// verifies.
VerifyReport verify_prop1(int r, int k, const EngineLimits& limits = {});

// For family_prop2(r): the r-stable part equals the added step-r pairs, no r
// of them are pairwise disjoint (so chi = 1), and refuting every removal set
// of size <= r-1 shows cd_r >= r. Optionally also computes cd_r exactly.
VerifyReport verify_prop2(int r, bool exact_cd, const EngineLimits& limits = {});

// Exact chi over the stable and almost-stable parts; their difference is at
// most 1, with the one-fresh-color extension as a constructive witness.
struct RemarkReport {
  int r = 0;
  int chi_stable = 0;
  int chi_almost = 0;
  int difference = 0;
  bool bound_holds = false;
  int extension_colors = 0;
  bool extension_verified = false;
};

RemarkReport verify_remark_bound(const SetSystem& f, int r,
                                 const EngineLimits& limits = {});

// frick_gap over family_fnr(n, r) for r <= n <= n_max with n not a multiple
// of r.
std::vector<GapReport> footnote_grid(int r, int n_max,
                                     const EngineLimits& limits = {});

struct ScanParams {
  int n_min = 4, n_max = 8;
  int members_min = 2, members_max = 8;
  int size_min = 2, size_max = 3;
  int r_min = 2, r_max = 3;
  int samples = 0;
  std::uint64_t seed = 0;
};

struct ScanEntry {
  int sample_index = 0;
  std::string family_name;
  SetSystem family;
  int r = 0;
  bool skipped = false;
  std::string skip_reason;
  std::optional<GapReport> frick;
  std::optional<GapReport> weak;

  bool violated() const;
};

struct ScanResult {
  ScanParams params;
  std::vector<ScanEntry> entries;  // violations first, then by sample index
  int evaluated = 0;
  int skipped = 0;
  int frick_violations = 0;
  int weak_violations = 0;
};

// Seeded family sampler used by the scan; exposed for the test suites.
SetSystem sample_family(Rng& rng, const ScanParams& params);

// Reproducible random scan: same params => byte-identical report. Planted
// families are appended after the random samples and evaluated identically.
ScanResult scan_random_families(const ScanParams& params,
                                const EngineLimits& limits = {},
                                const std::vector<SetSystem>& planted = {});

}  // namespace kgx

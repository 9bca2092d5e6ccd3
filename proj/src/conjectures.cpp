#include "kgx/conjectures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "kgx/kneser.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kgx {

namespace {

std::string default_name(const SetSystem& f) {
  std::ostringstream os;
  os << "setsystem(n=" << f.ground_size << ",members=" << f.members.size()
     << ")";
  return os.str();
}

GapReport gap_for_part(const SetSystem& f, int r, StabilityKind kind,
                       const EngineLimits& limits, std::string family_name) {
  if (r < 2) throw Error("r must be at least 2");
  GapReport report;
  report.family = family_name.empty() ? default_name(f) : std::move(family_name);
  report.r = r;
  report.variant = kind == StabilityKind::Stable ? GapVariant::FrickStable
                                                 : GapVariant::WeakAlmostStable;
  report.exploratory_r2 = kind == StabilityKind::Stable && r == 2;

  const SetSystem part = filter_part(f, r, kind);
  const Hypergraph kg = build_kneser(part, r, limits);
  ChiResult chi = chromatic_number(kg, limits);
  report.lhs_chi = chi.chi;
  if (chi.certificate) report.chi_certificate = *chi.certificate;

  DefectResult defect = colorability_defect(as_hypergraph(f), r, limits);
  report.cd = defect.cd;
  report.defect_certificate = std::move(defect.certificate);
  report.rhs = ceil_div(defect.cd, r - 1);
  report.verdict =
      report.lhs_chi < report.rhs ? Verdict::Violated : Verdict::Satisfied;
  return report;
}

Check make_check(std::string name, bool passed, std::string details = "") {
  return Check{std::move(name), passed, std::move(details)};
}

}  // namespace

int lovasz_value(int n, int k) {
  if (k < 1) throw Error("k must be positive");
  if (n < 2 * k) throw Error("requires n >= 2k");
  return n - 2 * (k - 1);
}

int afl_bound(int n, int k, int r) {
  if (r < 2) throw Error("r must be at least 2");
  if (k < 1) throw Error("k must be positive");
  if (n < r * k) throw Error("requires n >= rk");
  return ceil_div(n - r * (k - 1), r - 1);
}

GapReport frick_gap(const SetSystem& f, int r, const EngineLimits& limits,
                    std::string family_name) {
  return gap_for_part(f, r, StabilityKind::Stable, limits,
                      std::move(family_name));
}

GapReport weak_gap(const SetSystem& f, int r, const EngineLimits& limits,
                   std::string family_name) {
  return gap_for_part(f, r, StabilityKind::AlmostStable, limits,
                      std::move(family_name));
}

ZieglerReport ziegler_check(int n, int k, int r, const EngineLimits& limits) {
  ZieglerReport report;
  report.n = n;
  report.k = k;
  report.r = r;
  report.bound = afl_bound(n, k, r);
  const SetSystem stable =
      filter_part(complete_k_subsets(n, k), r, StabilityKind::Stable);
  ChiResult chi = chromatic_number(build_kneser(stable, r, limits), limits);
  report.chi = chi.chi;
  if (chi.certificate) report.certificate = *chi.certificate;
  report.relation = report.chi == report.bound ? Relation::Equal
                    : report.chi < report.bound ? Relation::Less
                                                : Relation::Greater;
  return report;
}

VerifyReport verify_prop1(int r, int k, const EngineLimits& limits) {
  if (r < 2) throw Error("r must be at least 2");
  if (k < 1) throw Error("k must be at least 1");
  const int n = k * r + 1;
  VerifyReport report;
  {
    std::ostringstream os;
    os << "prop1(r=" << r << ",k=" << k << ",n=" << n << ")";
    report.title = os.str();
  }
  const SetSystem f = family_fnr(n, r);
  const SetSystem stable = filter_part(f, r, StabilityKind::Stable);
  report.checks.push_back(
      make_check("stable part empty", stable.members.empty(),
                 std::to_string(stable.members.size()) + " members"));

  ChiResult chi = chromatic_number(build_kneser(stable, r, limits), limits);
  report.checks.push_back(make_check("chi over stable part is 0", chi.chi == 0,
                                     "chi=" + std::to_string(chi.chi)));

  DefectResult defect = colorability_defect(as_hypergraph(f), r, limits);
  report.checks.push_back(make_check(
      "colorability defect equals 1", defect.cd == 1,
      "cd=" + std::to_string(defect.cd)));
  report.checks.push_back(make_check(
      "returned defect certificate verifies",
      verify_defect_certificate(as_hypergraph(f), defect.certificate)));

  // the explicit witness: remove label n, color label v with ((v-1) mod r)+1
  DefectCertificate explicit_cert;
  explicit_cert.removed = {n};
  explicit_cert.r = r;
  for (int v = 1; v < n; ++v)
    explicit_cert.coloring.colors.push_back((v - 1) % r + 1);
  explicit_cert.coloring.num_colors = r;
  report.checks.push_back(
      make_check("explicit remove-n certificate verifies",
                 verify_defect_certificate(as_hypergraph(f), explicit_cert)));

  report.values.emplace_back("n", n);
  report.values.emplace_back("members", static_cast<long long>(f.members.size()));
  report.values.emplace_back("cd", defect.cd);
  report.values.emplace_back("chi_stable", chi.chi);
  return report;
}

VerifyReport verify_prop2(int r, bool exact_cd, const EngineLimits& limits) {
  if (r < 2) throw Error("r must be at least 2");
  const int n = r * (2 * r - 1);
  VerifyReport report;
  {
    std::ostringstream os;
    os << "prop2(r=" << r << ",n=" << n << ")";
    report.title = os.str();
  }
  const SetSystem f = family_prop2(r);
  const SetSystem stable = filter_part(f, r, StabilityKind::Stable);

  const SetSystem expected =
      make_set_system(n, prop2_added_pairs(r));
  report.checks.push_back(make_check(
      "stable part equals the added step-r pairs", stable == expected,
      std::to_string(stable.members.size()) + " members"));

  std::set<int> support;
  for (const Subset& m : stable.members)
    support.insert(m.labels.begin(), m.labels.end());
  report.checks.push_back(make_check(
      "stable part spans 2r-1 labels",
      static_cast<int>(support.size()) == 2 * r - 1,
      std::to_string(support.size()) + " labels"));

  const bool disjoint = has_r_pairwise_disjoint(stable, r);
  report.checks.push_back(
      make_check("no r pairwise disjoint stable members", !disjoint));

  ChiResult chi = chromatic_number(build_kneser(stable, r, limits), limits);
  report.checks.push_back(make_check("chi over stable part is 1", chi.chi == 1,
                                     "chi=" + std::to_string(chi.chi)));

  DefectEngine engine(as_hypergraph(f), r, limits);
  RefutationReport refutation = engine.lower_bound_report(r - 1);
  report.checks.push_back(make_check(
      "all removal sets of size <= r-1 refuted", refutation.refuted,
      std::to_string(refutation.sets_tested) + " sets tested"));

  report.values.emplace_back("n", n);
  report.values.emplace_back("members", static_cast<long long>(f.members.size()));
  report.values.emplace_back("chi_stable", chi.chi);
  report.values.emplace_back("cd_lower_bound", r);
  report.values.emplace_back("refuted_sets",
                             static_cast<long long>(refutation.sets_tested));
  if (exact_cd) {
    DefectResult defect = engine.colorability_defect();
    report.checks.push_back(make_check(
        "exact cd consistent with the lower bound", defect.cd >= r,
        "cd=" + std::to_string(defect.cd)));
    report.checks.push_back(make_check(
        "defect certificate verifies",
        verify_defect_certificate(as_hypergraph(f), defect.certificate)));
    report.values.emplace_back("cd_exact", defect.cd);
  }
  return report;
}

RemarkReport verify_remark_bound(const SetSystem& f, int r,
                                 const EngineLimits& limits) {
  if (r < 2) throw Error("r must be at least 2");
  RemarkReport report;
  report.r = r;
  const SetSystem stable = filter_part(f, r, StabilityKind::Stable);
  const SetSystem almost = filter_part(f, r, StabilityKind::AlmostStable);
  ChiResult chi_s = chromatic_number(build_kneser(stable, r, limits), limits);
  ChiResult chi_a = chromatic_number(build_kneser(almost, r, limits), limits);
  report.chi_stable = chi_s.chi;
  report.chi_almost = chi_a.chi;
  report.difference = chi_a.chi - chi_s.chi;
  report.bound_holds = report.difference <= 1;

  ColoringCertificate base =
      chi_s.certificate ? *chi_s.certificate : ColoringCertificate{{}, 0};
  ColoringCertificate extended = extend_stable_coloring(f, r, base, limits);
  report.extension_colors = extended.num_colors;
  report.extension_verified = extended.num_colors <= chi_s.chi + 1;
  return report;
}

std::vector<GapReport> footnote_grid(int r, int n_max,
                                     const EngineLimits& limits) {
  if (r < 2) throw Error("r must be at least 2");
  std::vector<GapReport> reports;
  for (int n = std::max(2, r); n <= n_max; ++n) {
    if (n % r == 0) continue;
    std::ostringstream os;
    os << "fnr(n=" << n << ",r=" << r << ")";
    reports.push_back(frick_gap(family_fnr(n, r), r, limits, os.str()));
  }
  return reports;
}

bool ScanEntry::violated() const {
  return (frick && frick->verdict == Verdict::Violated) ||
         (weak && weak->verdict == Verdict::Violated);
}

SetSystem sample_family(Rng& rng, const ScanParams& params) {
  const int n = rng.uniform_int(params.n_min, params.n_max);
  const int want = rng.uniform_int(params.members_min, params.members_max);
  std::set<std::vector<int>> seen;
  std::vector<Subset> members;
  const int size_max = std::min(params.size_max, n);
  const int size_min = std::min(params.size_min, size_max);
  int attempts = 0;
  while (static_cast<int>(members.size()) < want && attempts < 200 * want) {
    ++attempts;
    const int size = rng.uniform_int(size_min, size_max);
    std::vector<int> labels;
    while (static_cast<int>(labels.size()) < size) {
      const int v = rng.uniform_int(1, n);
      if (std::find(labels.begin(), labels.end(), v) == labels.end())
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    if (seen.insert(labels).second) members.push_back(Subset{labels});
  }
  return make_set_system(n, std::move(members));
}

ScanResult scan_random_families(const ScanParams& params,
                                const EngineLimits& limits,
                                const std::vector<SetSystem>& planted) {
  if (params.samples < 0) throw Error("sample count must be non-negative");
  if (params.n_min < 1 || params.n_min > params.n_max ||
      params.members_min > params.members_max ||
      params.size_min > params.size_max || params.r_min > params.r_max ||
      params.r_min < 2)
    throw Error("invalid scan parameter ranges");

  ScanResult result;
  result.params = params;

  struct Job {
    int index;
    std::string name;
    SetSystem family;
    int r;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < params.samples; ++i) {
    Rng rng(params.seed * 1000003ull + static_cast<std::uint64_t>(i));
    Job job;
    job.index = i;
    job.name = "sample[" + std::to_string(i) + "]";
    job.family = sample_family(rng, params);
    job.r = rng.uniform_int(params.r_min, params.r_max);
    jobs.push_back(std::move(job));
  }
  for (std::size_t p = 0; p < planted.size(); ++p) {
    Job job;
    job.index = params.samples + static_cast<int>(p);
    job.name = "planted[" + std::to_string(p) + "]";
    job.family = planted[p];
    job.r = std::clamp(2, params.r_min, params.r_max);
    jobs.push_back(std::move(job));
  }

  std::vector<ScanEntry> entries(jobs.size());
#ifdef _OPENMP
  const int threads = std::max(1, limits.threads);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
#endif
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    ScanEntry& entry = entries[j];
    entry.sample_index = jobs[j].index;
    entry.family_name = jobs[j].name;
    entry.family = jobs[j].family;
    entry.r = jobs[j].r;
    try {
      entry.frick = frick_gap(jobs[j].family, jobs[j].r, limits, jobs[j].name);
      entry.weak = weak_gap(jobs[j].family, jobs[j].r, limits, jobs[j].name);
    } catch (const std::exception& e) {
      entry.skipped = true;
      entry.skip_reason = e.what();
      entry.frick.reset();
      entry.weak.reset();
    }
  }

  std::stable_sort(entries.begin(), entries.end(),
                   [](const ScanEntry& a, const ScanEntry& b) {
                     return a.violated() > b.violated();
                   });
  for (const ScanEntry& e : entries) {
    if (e.skipped) {
      ++result.skipped;
      continue;
    }
    ++result.evaluated;
    if (e.frick && e.frick->verdict == Verdict::Violated)
      ++result.frick_violations;
    if (e.weak && e.weak->verdict == Verdict::Violated)
      ++result.weak_violations;
  }
  result.entries = std::move(entries);
  return result;
}

}  // namespace kgx

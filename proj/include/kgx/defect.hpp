#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "kgx/coloring.hpp"
#include "kgx/hypergraph.hpp"
#include "kgx/limits.hpp"

namespace kgx {

// Removal set plus a proper r-coloring of the induced hypergraph, witnessing
// cd_r <= |removed|. `removed` holds 1-based original vertex ids; `coloring`
// covers the remaining vertices in ascending original order.
struct DefectCertificate {
  std::vector<int> removed;
  ColoringCertificate coloring;
  int r = 0;
};

struct SizeRefutation {
  int size = 0;
  std::uint64_t sets_tested = 0;
};

struct DefectResult {
  int cd = 0;
  DefectCertificate certificate;
  std::vector<SizeRefutation> refuted_sizes;
};

// Exhaustive check that no removal set of size <= max_size makes the
// hypergraph r-colorable (or the lexicographically first counterwitness).
struct RefutationReport {
  int r = 0;
  int max_size = 0;
  bool refuted = false;
  std::uint64_t sets_tested = 0;
  std::vector<SizeRefutation> per_size;
  std::optional<DefectCertificate> counterwitness;
};

struct InducedHypergraph {
  Hypergraph graph;
  std::vector<int> old_index;  // new vertex -> original vertex (0-based)
};

// Keeps the edges entirely avoiding `removed` (1-based ids), re-indexed over
// the complement.
InducedHypergraph induced_on_remaining(const Hypergraph& h,
                                       const std::vector<int>& removed);

bool verify_defect_certificate(const Hypergraph& h, const DefectCertificate& cert);

// Staged search over removal sizes 0, 1, ... with two prunings: refuted
// removal masks are memoized, and any discovered non-r-colorable
// substructure (an (r+1)-clique among the 2-uniform edges, or a singleton
// edge) restricts candidates to sets hitting it. Candidates at one size may
// be scanned in parallel; the returned set is always the lexicographically
// smallest that works.
class DefectEngine {
 public:
  DefectEngine(const Hypergraph& h, int r, const EngineLimits& limits = {});

  DefectResult colorability_defect();
  RefutationReport lower_bound_report(int max_size);

 private:
  struct Outcome {
    bool colorable = false;
    ColoringCertificate coloring;
    std::optional<LabelMask> new_obstruction;
    bool ran_search = false;
  };
  Outcome evaluate(const LabelMask& removed_mask,
                   const std::vector<int>& removed0) const;
  bool scan_size(int size, std::vector<int>& found_removed,
                 ColoringCertificate& found_coloring);
  DefectCertificate make_certificate(const std::vector<int>& removed0,
                                     ColoringCertificate coloring) const;

  const Hypergraph& h_;
  int r_;
  EngineLimits limits_;
  std::vector<LabelMask> adjacency_;
  std::vector<LabelMask> obstructions_;
  std::unordered_set<LabelMask, LabelMaskHash> refuted_masks_;
};

DefectResult colorability_defect(const Hypergraph& h, int r,
                                 const EngineLimits& limits = {});
RefutationReport defect_lower_bound_report(const Hypergraph& h, int r,
                                           int max_size,
                                           const EngineLimits& limits = {});

}  // namespace kgx

#pragma once

#include <cstdint>
#include <vector>

#include "kgx/hypergraph.hpp"
#include "kgx/limits.hpp"
#include "kgx/set_system.hpp"

namespace kgx {

// KG^r(F): one vertex per member of F, one edge per r-set of pairwise
// disjoint members. Vertices keep the canonical member order; edges come out
// in lexicographic order regardless of thread count.
Hypergraph build_kneser(const SetSystem& f, int r, const EngineLimits& limits = {});

// True iff some r members are pairwise disjoint. Early-exits on the first
// witness and never materializes edges.
bool has_r_pairwise_disjoint(const SetSystem& f, int r);

// Number of unordered r-sets of pairwise disjoint members; equals the edge
// count of build_kneser.
std::uint64_t count_disjoint_r_tuples(const SetSystem& f, int r,
                                      const EngineLimits& limits = {});

// Enumeration kernels behind build_kneser / count_disjoint_r_tuples. The
// serial versions are the reference implementations; the parallel versions
// split on the first tuple element and must produce identical output. Both
// are exposed for the comparison tests and the benchmark.
std::vector<std::vector<int>> disjoint_tuples_serial(
    const std::vector<LabelMask>& masks, int r, std::uint64_t cap);
std::vector<std::vector<int>> disjoint_tuples_parallel(
    const std::vector<LabelMask>& masks, int r, std::uint64_t cap, int threads);
std::uint64_t count_disjoint_tuples_serial(const std::vector<LabelMask>& masks,
                                           int r, std::uint64_t cap);
std::uint64_t count_disjoint_tuples_parallel(const std::vector<LabelMask>& masks,
                                             int r, std::uint64_t cap,
                                             int threads);

}  // namespace kgx

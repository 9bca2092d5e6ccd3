#include "kgx/kneser.hpp"

#include <atomic>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kgx {

namespace {

// Lexicographic DFS over index tuples i1 < i2 < ... < ir with pairwise
// disjoint masks. Aborts via `stop` once the running total passes the cap.
template <typename Emit>
void extend_tuples(const std::vector<LabelMask>& masks, int r, int depth,
                   int from, LabelMask used, std::vector<int>& tuple,
                   std::atomic<bool>& stop, Emit&& emit) {
  const int m = static_cast<int>(masks.size());
  if (depth == r) {
    emit(tuple);
    return;
  }
  // not enough members left to complete the tuple
  const int last = m - (r - depth);
  for (int i = from; i <= last; ++i) {
    if (stop.load(std::memory_order_relaxed)) return;
    if (used.intersects(masks[i])) continue;
    tuple.push_back(i);
    extend_tuples(masks, r, depth + 1, i + 1, used | masks[i], tuple, stop,
                  emit);
    tuple.pop_back();
  }
}

[[noreturn]] void throw_edge_cap(std::uint64_t cap) {
  throw CapExceeded("disjoint r-tuple count exceeds the edge cap " +
                    std::to_string(cap) + "; raise --max-edges to proceed");
}

std::uint64_t count_from_first(const std::vector<LabelMask>& masks, int r,
                               int first, std::atomic<bool>& stop) {
  std::uint64_t count = 0;
  std::vector<int> tuple{first};
  extend_tuples(masks, r, 1, first + 1, masks[first], tuple, stop,
                [&](const std::vector<int>&) { ++count; });
  return count;
}

}  // namespace

std::uint64_t count_disjoint_tuples_serial(const std::vector<LabelMask>& masks,
                                           int r, std::uint64_t cap) {
  std::atomic<bool> stop{false};
  std::uint64_t count = 0;
  std::vector<int> tuple;
  extend_tuples(masks, r, 0, 0, LabelMask{}, tuple, stop,
                [&](const std::vector<int>&) {
                  if (++count > cap) stop.store(true);
                });
  if (count > cap) throw_edge_cap(cap);
  return count;
}

std::uint64_t count_disjoint_tuples_parallel(const std::vector<LabelMask>& masks,
                                             int r, std::uint64_t cap,
                                             int threads) {
#ifdef _OPENMP
  if (threads > 1) {
    const int m = static_cast<int>(masks.size());
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> total{0};
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int i = 0; i < m; ++i) {
      if (stop.load(std::memory_order_relaxed)) continue;
      const std::uint64_t local = count_from_first(masks, r, i, stop);
      if (total.fetch_add(local) + local > cap) stop.store(true);
    }
    if (total.load() > cap || stop.load()) throw_edge_cap(cap);
    return total.load();
  }
#else
  (void)threads;
#endif
  return count_disjoint_tuples_serial(masks, r, cap);
}

std::vector<std::vector<int>> disjoint_tuples_serial(
    const std::vector<LabelMask>& masks, int r, std::uint64_t cap) {
  std::atomic<bool> stop{false};
  std::vector<std::vector<int>> out;
  std::vector<int> tuple;
  extend_tuples(masks, r, 0, 0, LabelMask{}, tuple, stop,
                [&](const std::vector<int>& t) {
                  if (out.size() >= cap) {
                    stop.store(true);
                    return;
                  }
                  out.push_back(t);
                });
  if (stop.load()) throw_edge_cap(cap);
  return out;
}

std::vector<std::vector<int>> disjoint_tuples_parallel(
    const std::vector<LabelMask>& masks, int r, std::uint64_t cap,
    int threads) {
#ifdef _OPENMP
  if (threads > 1) {
    // Counting pass settles the cap; the enumeration pass can then fill
    // per-first-index buckets whose concatenation is already lexicographic.
    count_disjoint_tuples_parallel(masks, r, cap, threads);
    const int m = static_cast<int>(masks.size());
    std::vector<std::vector<std::vector<int>>> buckets(m);
    std::atomic<bool> stop{false};
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int i = 0; i < m; ++i) {
      std::vector<int> tuple{i};
      extend_tuples(masks, r, 1, i + 1, masks[i], tuple, stop,
                    [&](const std::vector<int>& t) { buckets[i].push_back(t); });
    }
    std::vector<std::vector<int>> out;
    for (auto& b : buckets)
      for (auto& t : b) out.push_back(std::move(t));
    return out;
  }
#else
  (void)threads;
#endif
  return disjoint_tuples_serial(masks, r, cap);
}

Hypergraph build_kneser(const SetSystem& f, int r, const EngineLimits& limits) {
  if (r < 2) throw Error("r must be at least 2");
  limits.check_deadline("build_kneser");
  const std::vector<LabelMask> masks = member_masks(f);
  std::vector<std::vector<int>> edges =
      disjoint_tuples_parallel(masks, r, limits.max_edges, limits.threads);
  Hypergraph h;
  h.vertex_count = static_cast<int>(f.members.size());
  h.edges = std::move(edges);
  h.vertex_labels = f.members;
  return h;
}

bool has_r_pairwise_disjoint(const SetSystem& f, int r) {
  if (r < 2) throw Error("r must be at least 2");
  const std::vector<LabelMask> masks = member_masks(f);
  std::atomic<bool> stop{false};
  bool found = false;
  std::vector<int> tuple;
  extend_tuples(masks, r, 0, 0, LabelMask{}, tuple, stop,
                [&](const std::vector<int>&) {
                  found = true;
                  stop.store(true);
                });
  return found;
}

std::uint64_t count_disjoint_r_tuples(const SetSystem& f, int r,
                                      const EngineLimits& limits) {
  if (r < 2) throw Error("r must be at least 2");
  limits.check_deadline("count_disjoint_r_tuples");
  const std::vector<LabelMask> masks = member_masks(f);
  return count_disjoint_tuples_parallel(masks, r, limits.max_edges,
                                        limits.threads);
}

}  // namespace kgx

#include "kgx/defect.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kgx/set_system.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kgx {

namespace {

template <typename F>
void for_bits(const LabelMask& m, F f) {
  for (int word = 0; word < 2; ++word) {
    std::uint64_t x = m.w[word];
    while (x) {
      f(word * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
}

// Greedy clique search on the 2-uniform part, restricted to `alive`.
// Returns a clique with more than r vertices if one is found.
std::optional<LabelMask> find_clique_larger_than(
    const std::vector<LabelMask>& adj, const LabelMask& alive, int r) {
  const int n = static_cast<int>(adj.size());
  for (int start = 0; start < n; ++start) {
    if (!alive.test(start)) continue;
    LabelMask clique;
    clique.set(start);
    int clique_size = 1;
    LabelMask cand = adj[start] & alive;
    while (!cand.empty() && clique_size <= r) {
      int best = -1, best_links = -1;
      for_bits(cand, [&](int u) {
        const int links = (adj[u] & cand).count();
        if (links > best_links) {
          best = u;
          best_links = links;
        }
      });
      clique.set(best);
      ++clique_size;
      cand = cand & adj[best];
    }
    if (clique_size > r) return clique;
  }
  return std::nullopt;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - (k - i)) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

InducedHypergraph induced0(const Hypergraph& h, const LabelMask& removed) {
  std::vector<int> old_index;
  std::vector<int> new_index(h.vertex_count, -1);
  for (int v = 0; v < h.vertex_count; ++v)
    if (!removed.test(v)) {
      new_index[v] = static_cast<int>(old_index.size());
      old_index.push_back(v);
    }
  std::vector<std::vector<int>> edges;
  for (const auto& e : h.edges) {
    bool inside = true;
    for (int v : e)
      if (removed.test(v)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    std::vector<int> mapped;
    mapped.reserve(e.size());
    for (int v : e) mapped.push_back(new_index[v]);
    edges.push_back(std::move(mapped));
  }
  std::optional<std::vector<Subset>> labels;
  if (h.vertex_labels) {
    labels.emplace();
    for (int v : old_index) labels->push_back((*h.vertex_labels)[v]);
  }
  InducedHypergraph out;
  out.graph = make_hypergraph(static_cast<int>(old_index.size()),
                              std::move(edges), std::move(labels));
  out.old_index = std::move(old_index);
  return out;
}

}  // namespace

InducedHypergraph induced_on_remaining(const Hypergraph& h,
                                       const std::vector<int>& removed) {
  LabelMask mask;
  for (int v : removed) {
    if (v < 1 || v > h.vertex_count)
      throw Error("removed vertex " + std::to_string(v) + " out of range");
    if (mask.test(v - 1))
      throw Error("removed vertex " + std::to_string(v) + " repeated");
    mask.set(v - 1);
  }
  return induced0(h, mask);
}

bool verify_defect_certificate(const Hypergraph& h,
                               const DefectCertificate& cert) {
  if (cert.r < 1) throw Error("certificate r must be positive");
  InducedHypergraph ind = induced_on_remaining(h, cert.removed);
  if (cert.coloring.num_colors > cert.r) return false;
  return verify_coloring(ind.graph, cert.coloring);
}

DefectEngine::DefectEngine(const Hypergraph& h, int r, const EngineLimits& limits)
    : h_(h), r_(r), limits_(limits) {
  if (r < 1) throw Error("r must be positive");
  if (h.vertex_count > kMaxGroundSize)
    throw CapExceeded("defect search supports at most " +
                      std::to_string(kMaxGroundSize) + " vertices");
  adjacency_ = pair_adjacency(h);
  for (const auto& e : h.edges)
    if (e.size() == 1) {
      LabelMask m;
      m.set(e[0]);
      obstructions_.push_back(m);
    }
}

DefectEngine::Outcome DefectEngine::evaluate(const LabelMask& removed_mask,
                                             const std::vector<int>&) const {
  Outcome out;
  for (const LabelMask& o : obstructions_)
    if (!o.intersects(removed_mask)) return out;  // obstruction survives

  out.ran_search = true;
  InducedHypergraph ind = induced0(h_, removed_mask);
  ColorDecision d = is_m_colorable(ind.graph, r_, limits_);
  if (d.colorable()) {
    out.colorable = true;
    out.coloring = std::move(*d.certificate);
    return out;
  }
  LabelMask alive;
  for (int v = 0; v < h_.vertex_count; ++v)
    if (!removed_mask.test(v)) alive.set(v);
  out.new_obstruction = find_clique_larger_than(adjacency_, alive, r_);
  return out;
}

bool DefectEngine::scan_size(int size, std::vector<int>& found_removed,
                             ColoringCertificate& found_coloring) {
  const int n = h_.vertex_count;
  std::vector<int> current(size);
  for (int i = 0; i < size; ++i) current[i] = i;
  bool exhausted = false;

#ifdef _OPENMP
  const int threads = std::max(1, limits_.threads);
#else
  const int threads = 1;
#endif
  const int chunk_size = std::max(64, threads * 16);

  while (!exhausted) {
    limits_.check_deadline("defect search");
    std::vector<std::vector<int>> chunk;
    std::vector<LabelMask> chunk_masks;
    while (static_cast<int>(chunk.size()) < chunk_size) {
      LabelMask mask;
      for (int v : current) mask.set(v);
      if (!refuted_masks_.count(mask)) {
        chunk.push_back(current);
        chunk_masks.push_back(mask);
      }
      if (size == 0 || !next_combination(current, n)) {
        exhausted = true;
        break;
      }
    }

    std::vector<Outcome> outcomes(chunk.size());
    bool cap_hit = false;
    std::string cap_what;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
#endif
    for (std::size_t j = 0; j < chunk.size(); ++j) {
      try {
        outcomes[j] = evaluate(chunk_masks[j], chunk[j]);
      } catch (const CapExceeded& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
        {
          cap_hit = true;
          cap_what = e.what();
        }
      }
    }
    if (cap_hit) throw CapExceeded(cap_what);

    for (std::size_t j = 0; j < chunk.size(); ++j) {
      if (outcomes[j].colorable) {
        found_removed = chunk[j];
        found_coloring = std::move(outcomes[j].coloring);
        return true;
      }
      refuted_masks_.insert(chunk_masks[j]);
      if (outcomes[j].new_obstruction) {
        const LabelMask& o = *outcomes[j].new_obstruction;
        if (std::find(obstructions_.begin(), obstructions_.end(), o) ==
            obstructions_.end())
          obstructions_.push_back(o);
      }
    }
  }
  return false;
}

DefectCertificate DefectEngine::make_certificate(
    const std::vector<int>& removed0, ColoringCertificate coloring) const {
  DefectCertificate cert;
  for (int v : removed0) cert.removed.push_back(v + 1);
  cert.coloring = std::move(coloring);
  cert.r = r_;
  return cert;
}

DefectResult DefectEngine::colorability_defect() {
  DefectResult result;
  for (int size = 0; size <= h_.vertex_count; ++size) {
    if (limits_.max_defect_size && size > *limits_.max_defect_size)
      throw CapExceeded("defect exceeds the removal-size cap " +
                        std::to_string(*limits_.max_defect_size));
    std::vector<int> removed;
    ColoringCertificate coloring;
    if (scan_size(size, removed, coloring)) {
      result.cd = size;
      result.certificate = make_certificate(removed, std::move(coloring));
      return result;
    }
    result.refuted_sizes.push_back(
        SizeRefutation{size, binomial(h_.vertex_count, size)});
  }
  throw Error("unreachable: removing every vertex is always r-colorable");
}

RefutationReport DefectEngine::lower_bound_report(int max_size) {
  if (max_size > h_.vertex_count) throw Error("max_size exceeds vertex count");
  RefutationReport report;
  report.r = r_;
  report.max_size = max_size;
  for (int size = 0; size <= max_size; ++size) {
    std::vector<int> removed;
    ColoringCertificate coloring;
    if (scan_size(size, removed, coloring)) {
      report.refuted = false;
      report.counterwitness = make_certificate(removed, std::move(coloring));
      return report;
    }
    const std::uint64_t tested = binomial(h_.vertex_count, size);
    report.per_size.push_back(SizeRefutation{size, tested});
    report.sets_tested += tested;
  }
  report.refuted = true;
  return report;
}

DefectResult colorability_defect(const Hypergraph& h, int r,
                                 const EngineLimits& limits) {
  DefectEngine engine(h, r, limits);
  return engine.colorability_defect();
}

RefutationReport defect_lower_bound_report(const Hypergraph& h, int r,
                                           int max_size,
                                           const EngineLimits& limits) {
  DefectEngine engine(h, r, limits);
  return engine.lower_bound_report(max_size);
}

}  // namespace kgx

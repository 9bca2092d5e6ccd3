#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgx/hypergraph.hpp"
#include "kgx/limits.hpp"
#include "kgx/set_system.hpp"

namespace kgx {

// A vertex -> color map witnessing m-colorability: colors[i] in 1..num_colors
// and no edge monochromatic.
struct ColoringCertificate {
  std::vector<int> colors;
  int num_colors = 0;

  bool operator==(const ColoringCertificate&) const = default;
};

enum class ColorStatus {
  Colorable,      // certificate attached
  NotColorable,   // complete search found no proper m-coloring
  SingletonEdge,  // uncolorable for every m; witness edge attached
};

struct ColorDecision {
  ColorStatus status = ColorStatus::NotColorable;
  std::optional<ColoringCertificate> certificate;
  std::optional<int> singleton_edge;

  bool colorable() const { return status == ColorStatus::Colorable; }
};

// Exact chromatic number. Either (chi, certificate) or infeasible_witness
// when a singleton edge makes every coloring improper. chi = 0 iff there are
// no vertices; chi = 1 iff vertices exist and the edge set is empty.
struct ChiResult {
  int chi = 0;
  std::optional<ColoringCertificate> certificate;
  std::optional<int> infeasible_witness;

  bool feasible() const { return !infeasible_witness.has_value(); }
};

// Complete decision procedure: a certificate is returned iff a proper
// m-coloring exists. Backtracking with forward checking, unit propagation
// and unused-color symmetry breaking; supports m <= 31 (beyond that the
// trivial all-distinct coloring applies whenever m >= vertex_count).
ColorDecision is_m_colorable(const Hypergraph& h, int m,
                             const EngineLimits& limits = {});

ChiResult chromatic_number(const Hypergraph& h, const EngineLimits& limits = {});

// Greedy coloring along the given vertex order; always proper, never stuck.
ColoringCertificate greedy_coloring(const Hypergraph& h,
                                    const std::vector<int>& order);
int greedy_upper_bound(const Hypergraph& h, const std::vector<int>& order);

// Default greedy / search order: by descending edge degree, index ties.
std::vector<int> descending_degree_order(const Hypergraph& h);

// True iff the certificate covers every vertex, stays within num_colors and
// leaves no edge monochromatic. Length mismatch is an error.
bool verify_coloring(const Hypergraph& h, const ColoringCertificate& cert);

// Lifts a proper coloring of KG^r(F_r-stab) to KG^r(F_almost-r-stab):
// stable members keep their color, all remaining members share one fresh
// color. The result is re-verified before it is returned.
ColoringCertificate extend_stable_coloring(const SetSystem& f, int r,
                                           const ColoringCertificate& stable_cert,
                                           const EngineLimits& limits = {});

// DIMACS CNF encoding of "h is m-colorable": variable (v-1)*m + c stands for
// vertex v taking color c; one at-least-one-color clause per vertex and one
// not-all-this-color clause per (edge, color).
struct CnfDocument {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  int vertex_count = 0;
  int num_colors = 0;

  std::string to_dimacs() const;
};

CnfDocument export_cnf(const Hypergraph& h, int m);

}  // namespace kgx

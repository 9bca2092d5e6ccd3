#pragma once

#include <optional>
#include <vector>

#include "kgx/set_system.hpp"

namespace kgx {

// Abstract hypergraph. Vertex indices are 0-based internally; every edge is
// sorted ascending and the edge list is sorted lexicographically, so equal
// hypergraphs serialize identically. vertex_labels carries the originating
// set-system members for Kneser outputs.
struct Hypergraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> edges;
  std::optional<std::vector<Subset>> vertex_labels;

  bool operator==(const Hypergraph&) const = default;
};

// Validates ranges, sorts edges into canonical order, rejects duplicate
// vertices within an edge and duplicate edges.
Hypergraph make_hypergraph(int vertex_count, std::vector<std::vector<int>> edges,
                           std::optional<std::vector<Subset>> labels = std::nullopt);

// The family viewed as the hypergraph ([n], F): vertex i is ground label i+1.
Hypergraph as_hypergraph(const SetSystem& f);

// Index of the first single-vertex edge, if any.
std::optional<int> find_singleton_edge(const Hypergraph& h);

// Adjacency masks built from the 2-uniform edges only.
std::vector<LabelMask> pair_adjacency(const Hypergraph& h);

}  // namespace kgx

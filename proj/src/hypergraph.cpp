#include "kgx/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "kgx/limits.hpp"

namespace kgx {

Hypergraph make_hypergraph(int vertex_count, std::vector<std::vector<int>> edges,
                           std::optional<std::vector<Subset>> labels) {
  if (vertex_count < 0) throw Error("vertex count must be non-negative");
  for (auto& e : edges) {
    if (e.empty()) throw Error("empty edge");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= vertex_count)
        throw Error("edge vertex " + std::to_string(e[i]) + " out of range");
      if (i > 0 && e[i - 1] == e[i])
        throw Error("repeated vertex " + std::to_string(e[i]) + " in edge");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error("duplicate edge");
  if (labels && static_cast<int>(labels->size()) != vertex_count)
    throw Error("label count does not match vertex count");

  Hypergraph h;
  h.vertex_count = vertex_count;
  h.edges = std::move(edges);
  h.vertex_labels = std::move(labels);
  return h;
}

Hypergraph as_hypergraph(const SetSystem& f) {
  std::vector<std::vector<int>> edges;
  edges.reserve(f.members.size());
  for (const Subset& m : f.members) {
    std::vector<int> e;
    e.reserve(m.labels.size());
    for (int v : m.labels) e.push_back(v - 1);
    edges.push_back(std::move(e));
  }
  return make_hypergraph(f.ground_size, std::move(edges));
}

std::optional<int> find_singleton_edge(const Hypergraph& h) {
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    if (h.edges[i].size() == 1) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<LabelMask> pair_adjacency(const Hypergraph& h) {
  std::vector<LabelMask> adj(h.vertex_count);
  for (const auto& e : h.edges)
    if (e.size() == 2) {
      adj[e[0]].set(e[1]);
      adj[e[1]].set(e[0]);
    }
  return adj;
}

}  // namespace kgx

#include "kgx/coloring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "kgx/kneser.hpp"

namespace kgx {

namespace {

constexpr int kMaxSearchColors = 31;

// DPLL-style proper-coloring search. Domains are color bitmasks; assigning a
// vertex updates per-edge state, and an edge whose colored vertices all share
// one color prunes that color from its last uncolored vertex. Units are
// propagated eagerly; branching picks the smallest domain and only ever tries
// used colors plus one fresh one.
class ColoringSearch {
 public:
  ColoringSearch(const Hypergraph& h, int m, const EngineLimits& limits)
      : h_(h), m_(m), limits_(limits), n_(h.vertex_count) {
    domain_.assign(n_, m_ >= 32 ? ~0u : (1u << m_) - 1u);
    color_.assign(n_, 0);
    degree_.assign(n_, 0);
    incident_.resize(n_);
    edge_state_.assign(h_.edges.size(), EdgeState{});
    for (std::size_t e = 0; e < h_.edges.size(); ++e)
      for (int v : h_.edges[e]) {
        incident_[v].push_back(static_cast<int>(e));
        ++degree_[v];
      }
  }

  bool solve(std::vector<int>& out) {
    if (!dfs()) return false;
    out = color_;
    return true;
  }

 private:
  struct EdgeState {
    int colored = 0;
    int mono = 0;  // 0 = none colored, -1 = mixed, else the common color
  };
  struct EdgeChange {
    int edge;
    EdgeState prev;
  };
  struct DomainChange {
    int vertex;
    std::uint32_t removed;
  };
  struct Frame {
    std::size_t domain_top, edge_top, assign_top;
    std::uint32_t used_mask;
  };

  Frame push_frame() const {
    return Frame{domain_trail_.size(), edge_trail_.size(), assign_trail_.size(),
                 used_mask_};
  }

  void pop_frame(const Frame& f) {
    while (assign_trail_.size() > f.assign_top) {
      color_[assign_trail_.back()] = 0;
      assign_trail_.pop_back();
      --num_assigned_;
    }
    while (edge_trail_.size() > f.edge_top) {
      edge_state_[edge_trail_.back().edge] = edge_trail_.back().prev;
      edge_trail_.pop_back();
    }
    while (domain_trail_.size() > f.domain_top) {
      domain_[domain_trail_.back().vertex] |= domain_trail_.back().removed;
      domain_trail_.pop_back();
    }
    used_mask_ = f.used_mask;
  }

  bool remove_color(int v, int c, std::vector<std::pair<int, int>>& queue) {
    const std::uint32_t bit = 1u << (c - 1);
    if (!(domain_[v] & bit)) return true;
    domain_trail_.push_back({v, bit});
    domain_[v] &= ~bit;
    if (domain_[v] == 0) return false;
    if (color_[v] == 0 && std::popcount(domain_[v]) == 1)
      queue.emplace_back(v, std::countr_zero(domain_[v]) + 1);
    return true;
  }

  bool assign_and_propagate(int v, int c) {
    std::vector<std::pair<int, int>> queue{{v, c}};
    while (!queue.empty()) {
      auto [u, cu] = queue.back();
      queue.pop_back();
      if (color_[u] != 0) {
        if (color_[u] != cu) return false;
        continue;
      }
      const std::uint32_t bit = 1u << (cu - 1);
      if (!(domain_[u] & bit)) return false;
      if (const std::uint32_t removed = domain_[u] & ~bit) {
        domain_trail_.push_back({u, removed});
        domain_[u] = bit;
      }
      color_[u] = cu;
      assign_trail_.push_back(u);
      ++num_assigned_;
      used_mask_ |= bit;

      for (int e : incident_[u]) {
        EdgeState& es = edge_state_[e];
        edge_trail_.push_back({e, es});
        ++es.colored;
        if (es.mono == 0)
          es.mono = cu;
        else if (es.mono != -1 && es.mono != cu)
          es.mono = -1;

        const int size = static_cast<int>(h_.edges[e].size());
        if (es.colored == size) {
          if (es.mono != -1) return false;  // monochromatic edge
        } else if (es.colored == size - 1 && es.mono > 0) {
          int w = -1;
          for (int x : h_.edges[e])
            if (color_[x] == 0) {
              w = x;
              break;
            }
          if (w >= 0 && !remove_color(w, es.mono, queue)) return false;
        }
      }
    }
    return true;
  }

  int pick_vertex() const {
    int best = -1, best_size = 33, best_degree = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] != 0) continue;
      const int size = std::popcount(domain_[v]);
      if (size < best_size || (size == best_size && degree_[v] > best_degree)) {
        best = v;
        best_size = size;
        best_degree = degree_[v];
      }
    }
    return best;
  }

  bool dfs() {
    if ((++nodes_ & 1023) == 0) limits_.check_deadline("coloring search");
    if (num_assigned_ == n_) return true;
    const int v = pick_vertex();
    const std::uint32_t full = m_ >= 32 ? ~0u : (1u << m_) - 1u;
    const std::uint32_t fresh = ~used_mask_ & (used_mask_ + 1) & full;
    std::uint32_t options = domain_[v] & (used_mask_ | fresh);
    while (options) {
      const int c = std::countr_zero(options) + 1;
      options &= options - 1;
      const Frame frame = push_frame();
      if (assign_and_propagate(v, c) && dfs()) return true;
      pop_frame(frame);
    }
    return false;
  }

  const Hypergraph& h_;
  int m_;
  EngineLimits limits_;
  int n_;
  int num_assigned_ = 0;
  std::uint32_t used_mask_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> domain_;
  std::vector<int> color_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> incident_;
  std::vector<EdgeState> edge_state_;
  std::vector<DomainChange> domain_trail_;
  std::vector<EdgeChange> edge_trail_;
  std::vector<int> assign_trail_;
};

ColoringCertificate identity_certificate(int n, int m) {
  ColoringCertificate cert;
  cert.colors.resize(n);
  std::iota(cert.colors.begin(), cert.colors.end(), 1);
  cert.num_colors = m;
  return cert;
}

}  // namespace

ColorDecision is_m_colorable(const Hypergraph& h, int m,
                             const EngineLimits& limits) {
  if (m < 1) throw Error("m must be positive");
  ColorDecision out;
  if (auto singleton = find_singleton_edge(h)) {
    out.status = ColorStatus::SingletonEdge;
    out.singleton_edge = singleton;
    return out;
  }
  if (h.vertex_count == 0 || h.edges.empty()) {
    out.status = ColorStatus::Colorable;
    out.certificate =
        ColoringCertificate{std::vector<int>(h.vertex_count, 1), m};
    return out;
  }
  if (m >= h.vertex_count) {
    // every edge has >= 2 vertices, so all-distinct colors are proper
    out.status = ColorStatus::Colorable;
    out.certificate = identity_certificate(h.vertex_count, m);
    return out;
  }
  if (m > kMaxSearchColors)
    throw CapExceeded("search supports at most 31 colors");

  ColoringSearch search(h, m, limits);
  std::vector<int> colors;
  if (search.solve(colors)) {
    out.status = ColorStatus::Colorable;
    out.certificate = ColoringCertificate{std::move(colors), m};
  } else {
    out.status = ColorStatus::NotColorable;
  }
  return out;
}

std::vector<int> descending_degree_order(const Hypergraph& h) {
  std::vector<int> degree(h.vertex_count, 0);
  for (const auto& e : h.edges)
    for (int v : e) ++degree[v];
  std::vector<int> order(h.vertex_count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });
  return order;
}

ColoringCertificate greedy_coloring(const Hypergraph& h,
                                    const std::vector<int>& order) {
  if (find_singleton_edge(h)) throw Error("singleton edge");
  std::vector<int> check(order);
  std::sort(check.begin(), check.end());
  for (int i = 0; i < h.vertex_count; ++i)
    if (i >= static_cast<int>(check.size()) || check[i] != i)
      throw Error("order is not a permutation of the vertices");

  ColoringCertificate cert;
  cert.colors.assign(h.vertex_count, 0);
  std::vector<std::vector<int>> incident(h.vertex_count);
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    for (int v : h.edges[e]) incident[v].push_back(static_cast<int>(e));

  std::vector<char> banned(h.vertex_count + 2, 0);
  for (int v : order) {
    std::fill(banned.begin(), banned.end(), 0);
    for (int e : incident[v]) {
      // only constraining when every other vertex of the edge already shares
      // one color
      int common = 0;
      bool constraining = true;
      for (int u : h.edges[e]) {
        if (u == v) continue;
        const int cu = cert.colors[u];
        if (cu == 0 || (common != 0 && cu != common)) {
          constraining = false;
          break;
        }
        common = cu;
      }
      if (constraining && common >= 1) banned[common] = 1;
    }
    int c = 1;
    while (banned[c]) ++c;
    cert.colors[v] = c;
    cert.num_colors = std::max(cert.num_colors, c);
  }
  if (h.vertex_count > 0 && cert.num_colors == 0) cert.num_colors = 1;
  return cert;
}

int greedy_upper_bound(const Hypergraph& h, const std::vector<int>& order) {
  return greedy_coloring(h, order).num_colors;
}

ChiResult chromatic_number(const Hypergraph& h, const EngineLimits& limits) {
  ChiResult out;
  if (auto singleton = find_singleton_edge(h)) {
    out.infeasible_witness = singleton;
    return out;
  }
  if (h.vertex_count == 0) {
    out.chi = 0;
    out.certificate = ColoringCertificate{{}, 0};
    return out;
  }
  if (h.edges.empty()) {
    out.chi = 1;
    out.certificate = ColoringCertificate{std::vector<int>(h.vertex_count, 1), 1};
    return out;
  }

  ColoringCertificate upper = greedy_coloring(h, descending_degree_order(h));
  for (int m = 2; m < upper.num_colors; ++m) {
    ColorDecision d = is_m_colorable(h, m, limits);
    if (d.colorable()) {
      out.chi = m;
      out.certificate = std::move(d.certificate);
      return out;
    }
  }
  out.chi = upper.num_colors;
  out.certificate = std::move(upper);
  return out;
}

bool verify_coloring(const Hypergraph& h, const ColoringCertificate& cert) {
  if (static_cast<int>(cert.colors.size()) != h.vertex_count)
    throw Error("certificate length does not match vertex count");
  for (int c : cert.colors)
    if (c < 1 || c > cert.num_colors) return false;
  for (const auto& e : h.edges) {
    const int first = cert.colors[e[0]];
    bool mixed = false;
    for (int v : e)
      if (cert.colors[v] != first) {
        mixed = true;
        break;
      }
    if (!mixed) return false;
  }
  return true;
}

ColoringCertificate extend_stable_coloring(const SetSystem& f, int r,
                                           const ColoringCertificate& stable_cert,
                                           const EngineLimits& limits) {
  if (r < 2) throw Error("r must be at least 2");
  const SetSystem stable = filter_part(f, r, StabilityKind::Stable);
  const SetSystem almost = filter_part(f, r, StabilityKind::AlmostStable);
  const Hypergraph kg_stable = build_kneser(stable, r, limits);
  if (!verify_coloring(kg_stable, stable_cert))
    throw Error("input certificate is not a proper coloring of the stable part");

  std::map<std::vector<int>, int> stable_color;
  for (std::size_t i = 0; i < stable.members.size(); ++i)
    stable_color[stable.members[i].labels] = stable_cert.colors[i];

  ColoringCertificate out;
  out.colors.reserve(almost.members.size());
  bool used_fresh = false;
  const int fresh = stable_cert.num_colors + 1;
  for (const Subset& m : almost.members) {
    auto it = stable_color.find(m.labels);
    if (it != stable_color.end()) {
      out.colors.push_back(it->second);
    } else {
      out.colors.push_back(fresh);
      used_fresh = true;
    }
  }
  out.num_colors = used_fresh ? fresh : stable_cert.num_colors;

  const Hypergraph kg_almost = build_kneser(almost, r, limits);
  if (!verify_coloring(kg_almost, out))
    throw Error("extended coloring failed verification");
  return out;
}

std::string CnfDocument::to_dimacs() const {
  std::ostringstream os;
  os << "c proper-coloring encoding\n";
  os << "c vertices=" << vertex_count << " colors=" << num_colors << "\n";
  os << "c variable for (vertex v, color c), both 1-based: (v-1)*" << num_colors
     << " + c\n";
  os << "c one at-least-one-color clause per vertex, then one"
        " not-all-this-color clause per (edge, color)\n";
  os << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
  for (const auto& clause : clauses) {
    for (int lit : clause) os << lit << ' ';
    os << "0\n";
  }
  return os.str();
}

CnfDocument export_cnf(const Hypergraph& h, int m) {
  if (m < 1) throw Error("m must be positive");
  if (find_singleton_edge(h)) throw Error("singleton edge");
  CnfDocument doc;
  doc.vertex_count = h.vertex_count;
  doc.num_colors = m;
  doc.num_vars = h.vertex_count * m;
  const auto var = [m](int v, int c) { return v * m + c; };  // v 0-based, c 1-based
  for (int v = 0; v < h.vertex_count; ++v) {
    std::vector<int> clause;
    for (int c = 1; c <= m; ++c) clause.push_back(var(v, c));
    doc.clauses.push_back(std::move(clause));
  }
  for (const auto& e : h.edges)
    for (int c = 1; c <= m; ++c) {
      std::vector<int> clause;
      for (int v : e) clause.push_back(-var(v, c));
      doc.clauses.push_back(std::move(clause));
    }
  return doc;
}

}  // namespace kgx

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mincut/bits.hpp"
#include "mincut/error.hpp"

namespace mincut {

using Vertex = std::uint32_t;

/// Undirected edge with normalized endpoints (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1. Immutable once built; the
/// default-constructed value is the null graph K_0.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds a simple graph, rejecting out-of-range endpoints, loops and repeats.
  static Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g(n);
    for (const auto& [a, b] : edges) {
      if (a >= n || b >= n) {
        throw Error(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(a) + "," +
                                                    std::to_string(b) + ") outside [0," +
                                                    std::to_string(n) + ")");
      }
      if (a == b) {
        throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(a));
      }
      g.adj_[a].push_back(b);
      g.adj_[b].push_back(a);
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto& row = g.adj_[v];
      std::sort(row.begin(), row.end());
      if (auto it = std::adjacent_find(row.begin(), row.end()); it != row.end()) {
        throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(v) + "," +
                                                  std::to_string(*it) + ") given twice");
      }
    }
    g.m_ = edges.size();
    return g;
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
  }

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(edges.size());
    for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
    return from_edge_list(n, pairs);
  }

  /// Builds from per-vertex neighbor masks (n <= 64); the masks must be symmetric.
  static Graph from_masks(std::span<const VertexMask> rows) {
    Graph g(rows.size());
    for (std::size_t v = 0; v < rows.size(); ++v) {
      for (Vertex w : mask_to_vertices(rows[v])) g.adj_[v].push_back(w);
      g.m_ += g.adj_[v].size();
    }
    g.m_ /= 2;
    return g;
  }

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return m_; }
  bool empty() const noexcept { return adj_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex a, Vertex b) const {
    if (a >= order() || b >= order()) return false;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  /// All edges, normalized and sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex w : adj_[u]) {
        if (u < w) out.push_back({u, w});
      }
    }
    return out;
  }

  /// Neighbor bitmasks; requires order() <= 64.
  std::vector<VertexMask> masks() const {
    if (order() > kMaskCapacity) {
      throw Error(ErrorCode::TooLarge, "bitmask view needs n <= 64, got " + std::to_string(order()));
    }
    std::vector<VertexMask> rows(order(), 0);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex w : adj_[u]) rows[u] |= bit(w);
    }
    return rows;
  }

  /// Graph obtained by renaming vertex v to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const {
    std::vector<Edge> es;
    es.reserve(m_);
    for (const Edge& e : edges()) es.push_back(make_edge(perm[e.u], perm[e.v]));
    return from_edges(order(), es);
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

struct DegreeProfile {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  bool regular = false;
};

inline DegreeProfile degree_profile(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "degree profile of K_0");
  DegreeProfile p{std::numeric_limits<std::size_t>::max(), 0, false};
  for (Vertex v = 0; v < g.order(); ++v) {
    p.min_degree = std::min(p.min_degree, g.degree(v));
    p.max_degree = std::max(p.max_degree, g.degree(v));
  }
  p.regular = p.min_degree == p.max_degree;
  return p;
}

/// Connected components, each sorted, listed by smallest member. Empty for K_0.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// K_0 counts as disconnected here; the operator treats it as having no cuts.
inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

/// BFS distances from `source`; unreachable vertices get SIZE_MAX.
inline std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), kInf);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kInf) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// Diameter of a connected graph (SIZE_MAX when disconnected, 0 for K_1).
inline std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (std::size_t d : distances_from(g, v)) best = std::max(best, d);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Standard families

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) es.push_back({u, v});
  }
  return Graph::from_edges(n, es);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v - 1, v});
  return Graph::from_edges(n, es);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::SizeTooSmall, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v - 1, v});
  es.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph::from_edges(n, es);
}

inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) es.push_back({u, static_cast<Vertex>(a + v)});
  }
  return Graph::from_edges(a + b, es);
}

/// Star K_{1,n-1} on n vertices with the center at 0.
inline Graph star_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "star needs n >= 1");
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({0, v});
  return Graph::from_edges(n, es);
}

/// Tree decoded from a Pruefer sequence of length n-2 over [0, n).
inline Graph tree_from_pruefer(std::span<const Vertex> seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) {
    if (x >= n) throw Error(ErrorCode::IndexOutOfRange, "Pruefer entry " + std::to_string(x));
    ++degree[x];
  }
  std::vector<Edge> es;
  for (Vertex x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    es.push_back(make_edge(leaf, x));
    --degree[leaf];
    --degree[x];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  es.push_back(make_edge(last[0], last[1]));
  return Graph::from_edges(n, es);
}

// ---------------------------------------------------------------------------
// Constructions

/// Disjoint union plus every edge between the two parts; g occupies 0..|g|-1.
inline Graph join(const Graph& g, const Graph& h) {
  const auto offset = static_cast<Vertex>(g.order());
  std::vector<Edge> es = g.edges();
  for (const Edge& e : h.edges()) es.push_back({e.u + offset, e.v + offset});
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) es.push_back({u, v + offset});
  }
  return Graph::from_edges(g.order() + h.order(), es);
}

/// Wheel with a rim of `rim` vertices (0..rim-1) and the hub last.
inline Graph wheel_graph(std::size_t rim) {
  if (rim < 3) throw Error(ErrorCode::SizeTooSmall, "wheel rim needs >= 3, got " + std::to_string(rim));
  return join(cycle_graph(rim), complete_graph(1));
}

/// One vertex per edge of g (in g.edges() order), adjacent when the edges meet.
inline Graph line_graph(const Graph& g) {
  const std::vector<Edge> base = g.edges();
  std::vector<Edge> es;
  for (Vertex i = 0; i < base.size(); ++i) {
    for (Vertex j = i + 1; j < base.size(); ++j) {
      const Edge& a = base[i];
      const Edge& b = base[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) es.push_back({i, j});
    }
  }
  return Graph::from_edges(base.size(), es);
}

/// Cartesian product; pair (a, b) becomes vertex a * |h| + b.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t k = h.order();
  auto id = [k](Vertex a, Vertex b) { return static_cast<Vertex>(a * k + b); };
  std::vector<Edge> es;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (const Edge& e : h.edges()) es.push_back({id(a, e.u), id(a, e.v)});
  }
  for (const Edge& e : g.edges()) {
    for (Vertex b = 0; b < k; ++b) es.push_back({id(e.u, b), id(e.v, b)});
  }
  std::sort(es.begin(), es.end());
  return Graph::from_edges(g.order() * k, es);
}

}  // namespace mincut

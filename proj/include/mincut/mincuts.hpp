#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "mincut/bits.hpp"
#include "mincut/error.hpp"
#include "mincut/graph.hpp"

namespace mincut {

inline constexpr std::size_t kDefaultEnumerationBudget = 24;

/// One minimum edge-cut <A, B>. A always contains vertex 0.
struct Cut {
  std::vector<Edge> edges;  // sorted
  VertexMask side_a = 0;
  VertexMask side_b = 0;

  std::vector<Vertex> side_a_vertices() const { return mask_to_vertices(side_a); }
  std::vector<Vertex> side_b_vertices() const { return mask_to_vertices(side_b); }

  bool trivial() const { return popcount(side_a) == 1 || popcount(side_b) == 1; }

  bool shares_edge_with(const Cut& other) const {
    auto a = edges.begin();
    auto b = other.edges.begin();
    while (a != edges.end() && b != other.edges.end()) {
      if (*a == *b) return true;
      if (*a < *b) ++a; else ++b;
    }
    return false;
  }

  friend bool operator==(const Cut&, const Cut&) = default;
};

/// Every minimum edge-cut of a graph, ordered by side_a as an integer mask.
struct MincutFamily {
  std::size_t lambda = 0;
  std::vector<Cut> cuts;
  std::vector<bool> trivial;

  std::size_t size() const noexcept { return cuts.size(); }
  std::size_t trivial_count() const {
    return static_cast<std::size_t>(std::count(trivial.begin(), trivial.end(), true));
  }
};

/// Edges of g with exactly one endpoint in `side` (n <= 64).
inline std::vector<Edge> boundary_edges(const Graph& g, VertexMask side) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (contains(side, e.u) != contains(side, e.v)) out.push_back(e);
  }
  return out;
}

/// Builds the Cut for the bipartition (side, complement), orienting it so A holds 0.
inline Cut make_cut(const Graph& g, VertexMask side) {
  const VertexMask all = low_bits(g.order());
  Cut c;
  c.side_a = contains(side, 0) ? side : (all & ~side);
  c.side_b = all & ~c.side_a;
  c.edges = boundary_edges(g, c.side_a);
  return c;
}

namespace detail {

// Unit-capacity s-t max flow on the symmetric digraph of g, by BFS augmenting
// paths. Stops once the flow reaches `cap`.
class UnitFlow {
 public:
  explicit UnitFlow(const Graph& g) : head_(g.order(), -1) {
    for (const Edge& e : g.edges()) {
      add_arc(e.u, e.v);
      add_arc(e.v, e.u);
    }
  }

  std::size_t max_flow(Vertex s, Vertex t, std::size_t cap) {
    for (Arc& a : arcs_) a.flow = 0;
    std::size_t flow = 0;
    std::vector<int> via(head_.size());
    while (flow < cap) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<Vertex> queue{s};
      std::vector<bool> seen(head_.size(), false);
      seen[s] = true;
      while (!queue.empty() && !seen[t]) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          const Vertex y = arcs_[a].to;
          if (!seen[y] && arcs_[a].flow < 1) {
            seen[y] = true;
            via[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (!seen[t]) break;
      for (Vertex y = t; y != s;) {
        const int a = via[y];
        arcs_[a].flow += 1;
        arcs_[a ^ 1].flow -= 1;
        y = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    Vertex to;
    int next;
    int flow;
  };

  void add_arc(Vertex from, Vertex to) {
    arcs_.push_back({to, head_[from], 0});
    head_[from] = static_cast<int>(arcs_.size() - 1);
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace detail

/// lambda(G); 0 for K_0, K_1 and disconnected graphs.
inline std::size_t edge_connectivity(const Graph& g) {
  if (g.order() <= 1 || !is_connected(g)) return 0;
  detail::UnitFlow flow(g);
  std::size_t best = degree_profile(g).min_degree;
  for (Vertex t = 1; t < g.order(); ++t) best = std::min(best, flow.max_flow(0, t, best));
  return best;
}

namespace detail {

// Depth-first assignment of vertices to the two sides with 0 fixed in A.
// A branch is cut when the edges already crossing plus an admissible lower
// bound for the unassigned vertices exceed lambda, or when either side can no
// longer become connected.
class CutEnumerator {
 public:
  CutEnumerator(const Graph& g, std::size_t lambda)
      : n_(g.order()), lambda_(lambda), adj_(g.masks()), all_(low_bits(g.order())) {
    // BFS order from 0 keeps assigned prefixes compact.
    std::vector<bool> seen(n_, false);
    order_.push_back(0);
    seen[0] = true;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Vertex w : mask_to_vertices(adj_[order_[i]])) {
        if (!seen[w]) {
          seen[w] = true;
          order_.push_back(w);
        }
      }
    }
  }

  std::vector<VertexMask> run() {
    descend(1, bit(0), 0, 0);
    return found_;
  }

 private:
  void descend(std::size_t idx, VertexMask a, VertexMask b, std::size_t crossing) {
    if (crossing > lambda_) return;
    const VertexMask free = all_ & ~(a | b);
    std::size_t bound = crossing;
    for (VertexMask f = free; f != 0 && bound <= lambda_; f &= f - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(f));
      bound += static_cast<std::size_t>(std::min(popcount(adj_[v] & a), popcount(adj_[v] & b)));
    }
    if (bound > lambda_) return;
    if ((reach_within(adj_, 0, all_ & ~b) & a) != a) return;
    if (b != 0) {
      const auto start = static_cast<std::size_t>(std::countr_zero(b));
      if ((reach_within(adj_, start, all_ & ~a) & b) != b) return;
    }
    if (idx == n_) {
      if (b != 0 && crossing == lambda_) found_.push_back(a);
      return;
    }
    const Vertex v = order_[idx];
    descend(idx + 1, a | bit(v), b, crossing + static_cast<std::size_t>(popcount(adj_[v] & b)));
    descend(idx + 1, a, b | bit(v), crossing + static_cast<std::size_t>(popcount(adj_[v] & a)));
  }

  std::size_t n_;
  std::size_t lambda_;
  std::vector<VertexMask> adj_;
  VertexMask all_;
  std::vector<Vertex> order_;
  std::vector<VertexMask> found_;
};

}  // namespace detail

/// All minimum edge-cuts. Disconnected graphs and n <= 1 give lambda 0 and no cuts.
inline MincutFamily enumerate_mincuts(const Graph& g,
                                      std::size_t budget = kDefaultEnumerationBudget) {
  MincutFamily family;
  if (g.order() <= 1 || !is_connected(g)) return family;
  const std::size_t limit = std::min(budget, kMaskCapacity);
  if (g.order() > limit) {
    throw Error(ErrorCode::BudgetExceeded, "mincut enumeration limited to n <= " +
                                               std::to_string(limit) + ", got " +
                                               std::to_string(g.order()));
  }
  family.lambda = edge_connectivity(g);
  std::vector<VertexMask> sides = detail::CutEnumerator(g, family.lambda).run();
  std::sort(sides.begin(), sides.end());
  for (VertexMask a : sides) {
    family.cuts.push_back(make_cut(g, a));
    family.trivial.push_back(family.cuts.back().trivial());
  }
  return family;
}

// ---------------------------------------------------------------------------
// Upper bounds on the number of mincuts of an order-n graph.

struct CountBoundReport {
  std::size_t count = 0;
  std::size_t order = 0;
  std::size_t lambda = 0;
  bool universal = true;              // |X| <= C(n, 2)
  std::optional<bool> even_bound;     // lambda >= 4, even
  std::optional<bool> odd_bound;      // lambda > 5, odd

  bool satisfied() const {
    return universal && even_bound.value_or(true) && odd_bound.value_or(true);
  }
};

// Both bounds are compared after clearing denominators so no rounding enters:
//   even: |X| (l+1)^2 <= 2 n^2 + (l-1)(l+1) n
//   odd:  |X| (l+5)   <= (l+9) n
inline CountBoundReport count_bound_check(const MincutFamily& family, std::size_t n) {
  CountBoundReport r;
  r.count = family.size();
  r.order = n;
  r.lambda = family.lambda;
  const auto x = static_cast<std::uint64_t>(r.count);
  const auto nn = static_cast<std::uint64_t>(n);
  const auto l = static_cast<std::uint64_t>(r.lambda);
  r.universal = x <= nn * (nn > 0 ? nn - 1 : 0) / 2;
  if (l >= 4 && l % 2 == 0) {
    r.even_bound = x * (l + 1) * (l + 1) <= 2 * nn * nn + (l - 1) * (l + 1) * nn;
  }
  if (l > 5 && l % 2 == 1) {
    r.odd_bound = x * (l + 5) <= (l + 9) * nn;
  }
  return r;
}

}  // namespace mincut

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mincut/bits.hpp"
#include "mincut/canonical.hpp"
#include "mincut/cut_structure.hpp"
#include "mincut/error.hpp"
#include "mincut/graph.hpp"
#include "mincut/graph_io.hpp"
#include "mincut/mincuts.hpp"
#include "mincut/xoperator.hpp"

namespace mincut {

struct ClassificationReport {
  std::size_t order = 0;
  std::size_t lambda = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  bool maximally_edge_connected = false;
  bool super_lambda = false;
  bool regular = false;
  bool fixed_point_predicted = false;
  std::array<bool, 5> sufficient_conditions{};
  std::size_t trivial_cut_count = 0;
  std::size_t nontrivial_cut_count = 0;
};

namespace detail {

inline void require_connected(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) {
    throw Error(ErrorCode::Disconnected, "classification needs a connected graph with n >= 2");
  }
}

// True when some `size`-subset of `pool` is a clique in g.
inline bool has_clique_in(const std::vector<VertexMask>& adj, VertexMask pool, std::size_t size) {
  if (size == 0) return true;
  const std::function<bool(VertexMask, VertexMask, std::size_t)> grow =
      [&](VertexMask chosen, VertexMask candidates, std::size_t need) {
        if (need == 0) return true;
        if (static_cast<std::size_t>(popcount(candidates)) < need) return false;
        for (VertexMask c = candidates; c != 0; c &= c - 1) {
          const auto v = static_cast<std::size_t>(std::countr_zero(c));
          const VertexMask later = candidates & ~low_bits(v + 1);
          if (grow(chosen | bit(v), later & adj[v], need - 1)) return true;
        }
        return false;
      };
  return grow(0, pool, size);
}

}  // namespace detail

/// The five classical sufficient conditions for super-lambda, each evaluated
/// literally on g without consulting the mincut family:
///   [0] deg u + deg v >= n for non-adjacent pairs, g not K_{n/2} x K_2
///   [1] deg u + deg v >= n + 1 for non-adjacent pairs
///   [2] min degree >= floor(n/2) + 1
///   [3] diameter 2 and no clique on delta vertices all of G-degree delta
///   [4] diameter 2 and n > 2 delta + Delta - 1
inline std::array<bool, 5> sufficient_conditions(const Graph& g) {
  detail::require_connected(g);
  const std::size_t n = g.order();
  const DegreeProfile deg = degree_profile(g);

  std::size_t min_nonadjacent_sum = SIZE_MAX;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) min_nonadjacent_sum = std::min(min_nonadjacent_sum, g.degree(u) + g.degree(v));
    }
  }
  bool is_prism = false;
  if (n % 2 == 0 && n >= 2) {
    is_prism = are_isomorphic(g, cartesian_product(complete_graph(n / 2), complete_graph(2)));
  }

  std::array<bool, 5> c{};
  c[0] = min_nonadjacent_sum >= n && !is_prism;
  c[1] = min_nonadjacent_sum >= n + 1;
  c[2] = deg.min_degree >= n / 2 + 1;

  const bool diameter_two = diameter(g) == 2;
  if (diameter_two) {
    const auto adj = g.masks();
    VertexMask min_degree_vertices = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) == deg.min_degree) min_degree_vertices |= bit(v);
    }
    c[3] = !detail::has_clique_in(adj, min_degree_vertices, deg.min_degree);
    c[4] = n + 1 > 2 * deg.min_degree + deg.max_degree;
  }
  return c;
}

inline ClassificationReport classify(const Graph& g, const MincutFamily& family) {
  detail::require_connected(g);
  const DegreeProfile deg = degree_profile(g);
  ClassificationReport r;
  r.order = g.order();
  r.lambda = family.lambda;
  r.min_degree = deg.min_degree;
  r.max_degree = deg.max_degree;
  r.regular = deg.regular;
  r.maximally_edge_connected = family.lambda == deg.min_degree;
  r.trivial_cut_count = family.trivial_count();
  r.nontrivial_cut_count = family.size() - r.trivial_cut_count;
  r.super_lambda = !family.cuts.empty() && r.nontrivial_cut_count == 0;
  r.fixed_point_predicted = r.super_lambda && r.regular && r.order >= 3;
  r.sufficient_conditions = sufficient_conditions(g);
  return r;
}

inline ClassificationReport classify(const Graph& g,
                                     std::size_t budget = kDefaultEnumerationBudget) {
  return classify(g, enumerate_mincuts(g, budget));
}

// ---------------------------------------------------------------------------
// Exhaustive sweeps over connected graphs, one representative per
// isomorphism class.

/// Calls `fn` once per isomorphism class of connected graphs on n vertices
/// (n <= 7), with the first labeled representative in edge-subset order.
template <typename Fn>
void for_each_connected_class(std::size_t n, Fn&& fn) {
  if (n > 7) throw Error(ErrorCode::InvalidSpec, "exhaustive sweeps are capped at n = 7");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
  }
  std::set<CanonicalCode> seen;
  const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
  std::vector<VertexMask> adj(n);
  for (std::uint64_t s = 0; s < subsets; ++s) {
    std::fill(adj.begin(), adj.end(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((s >> k) & 1U) {
        adj[pairs[k].first] |= bit(pairs[k].second);
        adj[pairs[k].second] |= bit(pairs[k].first);
      }
    }
    if (n == 0 || !is_connected_set(adj, low_bits(n))) continue;
    Graph g = Graph::from_masks(adj);
    if (seen.insert(canonical_form(g)).second) fn(g);
  }
}

struct SweepCounterexample {
  std::string graph6;
  std::string detail;
};

struct SoundnessReport {
  std::size_t n_max = 0;
  std::size_t graphs = 0;
  std::array<std::size_t, 5> condition_hits{};
  std::vector<SweepCounterexample> counterexamples;
};

/// Every satisfied sufficient condition must agree with the enumeration-level
/// super-lambda property, over all connected graphs with 2 <= n <= n_max.
inline SoundnessReport soundness_sweep(std::size_t n_max) {
  if (n_max > 7) throw Error(ErrorCode::InvalidSpec, "soundness sweep is capped at n = 7");
  SoundnessReport report;
  report.n_max = n_max;
  for (std::size_t n = 2; n <= n_max; ++n) {
    for_each_connected_class(n, [&](const Graph& g) {
      ++report.graphs;
      const ClassificationReport c = classify(g);
      for (std::size_t i = 0; i < 5; ++i) {
        if (!c.sufficient_conditions[i]) continue;
        ++report.condition_hits[i];
        if (!c.super_lambda) {
          report.counterexamples.push_back(
              {to_graph6(g), "condition " + std::to_string(i + 1) + " holds but graph is not super-lambda"});
        }
      }
    });
  }
  return report;
}

struct FixedPointSweepReport {
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t graphs = 0;
  std::size_t fixed = 0;
  std::vector<SweepCounterexample> counterexamples;
};

/// X(G) ~ G must hold exactly for the super-lambda regular graphs (n >= 3).
inline FixedPointSweepReport fixed_point_sweep(std::size_t n_min, std::size_t n_max) {
  FixedPointSweepReport report;
  report.n_min = n_min;
  report.n_max = n_max;
  for (std::size_t n = std::max<std::size_t>(n_min, 3); n <= n_max; ++n) {
    for_each_connected_class(n, [&](const Graph& g) {
      ++report.graphs;
      const MincutFamily family = enumerate_mincuts(g);
      const bool is_fixed = are_isomorphic(g, mincut_graph(family));
      const ClassificationReport c = classify(g, family);
      if (is_fixed) ++report.fixed;
      if (is_fixed != (c.super_lambda && c.regular)) {
        report.counterexamples.push_back(
            {to_graph6(g), is_fixed ? "X(G) ~ G without super-lambda and regularity"
                                    : "super-lambda and regular but X(G) !~ G"});
      }
    });
  }
  return report;
}

}  // namespace mincut

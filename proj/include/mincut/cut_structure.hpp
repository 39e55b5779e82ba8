#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "mincut/bits.hpp"
#include "mincut/error.hpp"
#include "mincut/graph.hpp"
#include "mincut/mincuts.hpp"

namespace mincut {

inline bool is_trivial_cut(const Cut& cut) { return cut.trivial(); }

/// Vertices whose degree equals lambda, i.e. whose stars are mincuts.
inline std::vector<Vertex> trivial_vertices(const Graph& g, std::size_t lambda) {
  std::vector<Vertex> out;
  if (lambda == 0) return out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == lambda) out.push_back(v);
  }
  return out;
}

enum class Side { A, B };

/// Vertices of the chosen side incident to at least one cut edge.
inline std::vector<Vertex> attachment_vertices(const Cut& cut, Side side) {
  const VertexMask own = side == Side::A ? cut.side_a : cut.side_b;
  VertexMask hit = 0;
  for (const Edge& e : cut.edges) hit |= bit(e.u) | bit(e.v);
  return mask_to_vertices(hit & own);
}

enum class CutKind { Nested, Crossing };

/// Relation of cuts X = <A, A'> and Y = <B, B'>, with the quadrants
/// A∩B, A∩B', A'∩B, A'∩B' in that order.
struct CutRelation {
  CutKind kind = CutKind::Nested;
  std::array<VertexMask, 4> quadrants{};
};

inline CutRelation classify_pair(const Cut& x, const Cut& y) {
  if (x.side_a == y.side_a) throw Error(ErrorCode::IdenticalCuts, "cuts induce the same bipartition");
  CutRelation rel;
  rel.quadrants = {x.side_a & y.side_a, x.side_a & y.side_b, x.side_b & y.side_a,
                   x.side_b & y.side_b};
  const bool all_nonempty =
      std::all_of(rel.quadrants.begin(), rel.quadrants.end(), [](VertexMask q) { return q != 0; });
  rel.kind = all_nonempty ? CutKind::Crossing : CutKind::Nested;
  return rel;
}

/// Number of edges with one end in `s` and the other in `t` (disjoint sets).
inline std::size_t edges_between(const Graph& g, VertexMask s, VertexMask t) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    if ((contains(s, e.u) && contains(t, e.v)) || (contains(s, e.v) && contains(t, e.u))) ++count;
  }
  return count;
}

/// Checks for one crossing pair. Boundaries are listed as
/// <A'∩B', A∩B'>, <A'∩B', A'∩B>, <A∩B, A∩B'>, <A∩B, A'∩B>;
/// diagonals as <A'∩B', A∩B>, <A'∩B, A∩B'>.
struct CrossingReport {
  std::size_t lambda = 0;
  bool lambda_even = false;
  std::array<std::size_t, 4> boundary{};
  std::array<std::size_t, 2> diagonal{};
  std::array<bool, 4> quadrant_is_mincut{};
  bool edges_disjoint = false;

  bool ok() const {
    const bool halves = std::all_of(boundary.begin(), boundary.end(),
                                    [&](std::size_t b) { return 2 * b == lambda; });
    const bool present = std::all_of(quadrant_is_mincut.begin(), quadrant_is_mincut.end(),
                                     [](bool b) { return b; });
    return lambda_even && halves && diagonal[0] == 0 && diagonal[1] == 0 && present &&
           edges_disjoint;
  }
};

inline bool family_has_bipartition(const MincutFamily& family, VertexMask side, std::size_t n) {
  const VertexMask all = low_bits(n);
  const VertexMask a = contains(side, 0) ? side : (all & ~side);
  return std::any_of(family.cuts.begin(), family.cuts.end(),
                     [a](const Cut& c) { return c.side_a == a; });
}

inline CrossingReport validate_crossing(const Graph& g, const MincutFamily& family, const Cut& x,
                                        const Cut& y, const CutRelation& rel) {
  if (rel.kind != CutKind::Crossing) throw Error(ErrorCode::NotCrossing, "pair is nested");
  const auto& [ab, ab_, a_b, a_b_] = rel.quadrants;
  CrossingReport r;
  r.lambda = family.lambda;
  r.lambda_even = family.lambda % 2 == 0;
  r.boundary = {edges_between(g, a_b_, ab_), edges_between(g, a_b_, a_b),
                edges_between(g, ab, ab_), edges_between(g, ab, a_b)};
  r.diagonal = {edges_between(g, a_b_, ab), edges_between(g, a_b, ab_)};
  for (std::size_t i = 0; i < 4; ++i) {
    r.quadrant_is_mincut[i] = family_has_bipartition(family, rel.quadrants[i], g.order());
  }
  r.edges_disjoint = !x.shares_edge_with(y);
  return r;
}

/// For two non-trivial mincuts sharing an edge, A∩B or A∩B' must be non-empty.
inline bool check_intersection_component_lemma(const Cut& x, const Cut& y) {
  if (!x.shares_edge_with(y)) return true;
  return (x.side_a & y.side_a) != 0 || (x.side_a & y.side_b) != 0;
}

// ---------------------------------------------------------------------------
// Whole-family validation, as run by `mincutx verify` and the acceptance suite.

struct StructureReport {
  std::size_t lambda = 0;
  std::size_t cut_count = 0;
  std::size_t pairs = 0;
  std::size_t nested = 0;
  std::size_t crossing = 0;
  std::size_t nontrivial_pairs = 0;
  CountBoundReport bounds;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

inline StructureReport verify_structure(const Graph& g, const MincutFamily& family) {
  StructureReport r;
  r.lambda = family.lambda;
  r.cut_count = family.size();
  r.bounds = count_bound_check(family, g.order());
  if (!r.bounds.satisfied()) r.violations.push_back("mincut count bound violated");

  for (std::size_t i = 0; i < family.size(); ++i) {
    const Cut& x = family.cuts[i];
    if (x.edges.size() != family.lambda) r.violations.push_back("cut " + std::to_string(i) + " has wrong size");
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Cut& y = family.cuts[j];
      ++r.pairs;
      const CutRelation rel = classify_pair(x, y);
      const std::string tag = "pair (" + std::to_string(i) + "," + std::to_string(j) + "): ";
      if (rel.kind == CutKind::Crossing) {
        ++r.crossing;
        const CrossingReport cr = validate_crossing(g, family, x, y, rel);
        if (!cr.lambda_even) r.violations.push_back(tag + "crossing with odd lambda");
        if (!cr.edges_disjoint) r.violations.push_back(tag + "crossing cuts share an edge");
        if (!cr.ok() && cr.lambda_even && cr.edges_disjoint) {
          r.violations.push_back(tag + "quadrant counts or quadrant mincuts wrong");
        }
      } else {
        ++r.nested;
      }
      if (!family.trivial[i] && !family.trivial[j]) {
        ++r.nontrivial_pairs;
        if (!check_intersection_component_lemma(x, y)) {
          r.violations.push_back(tag + "shared edge without side overlap");
        }
      }
    }
  }
  return r;
}

}  // namespace mincut

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mincut {

/// Vertex subset of a graph with at most 64 vertices, bit v set iff v is a member.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaskCapacity = 64;

constexpr VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

constexpr VertexMask low_bits(std::size_t n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

constexpr int popcount(VertexMask m) { return std::popcount(m); }

constexpr bool contains(VertexMask m, std::size_t v) { return (m >> v) & 1U; }

inline std::vector<std::uint32_t> mask_to_vertices(VertexMask m) {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

/// Vertices reachable from `start` inside `allowed` (start must be in allowed).
inline VertexMask reach_within(const std::vector<VertexMask>& adj, std::size_t start,
                               VertexMask allowed) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) {
      next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// True when the induced subgraph on `set` is connected (the empty set is not).
inline bool is_connected_set(const std::vector<VertexMask>& adj, VertexMask set) {
  if (set == 0) return false;
  auto start = static_cast<std::size_t>(std::countr_zero(set));
  return reach_within(adj, start, set) == set;
}

}  // namespace mincut

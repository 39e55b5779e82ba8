#pragma once

#include "mincut/graph.hpp"

namespace fixtures {

using mincut::Edge;
using mincut::Graph;
using mincut::Vertex;

// Square of a path on k vertices with K_4 caps at both ends. lambda = 3 and
// the prefixes {0..i}, 3 <= i <= k-5, are non-trivial nested mincuts whose
// consecutive members share exactly one edge.
inline Graph nested_chain(std::size_t k) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < k; ++i) es.push_back({i, i + 1});
  for (Vertex i = 0; i + 2 < k; ++i) es.push_back({i, i + 2});
  es.push_back({0, 3});
  es.push_back({static_cast<Vertex>(k - 4), static_cast<Vertex>(k - 1)});
  return Graph::from_edges(k, es);
}

// Four K_5 blocks on a ring; block b is joined to block b+1 by the edges
// (5b+2, 5(b+1)) and (5b+3, 5(b+1)+1). lambda = 4 and unions of two adjacent
// blocks give crossing mincuts.
inline Graph block_ring() {
  std::vector<Edge> es;
  for (Vertex b = 0; b < 4; ++b) {
    for (Vertex i = 0; i < 5; ++i) {
      for (Vertex j = i + 1; j < 5; ++j) es.push_back({5 * b + i, 5 * b + j});
    }
    const Vertex next = 5 * ((b + 1) % 4);
    es.push_back(mincut::make_edge(5 * b + 2, next));
    es.push_back(mincut::make_edge(5 * b + 3, next + 1));
  }
  return Graph::from_edges(20, es);
}

}  // namespace fixtures

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "mincut/cut_structure.hpp"
#include "mincut/experiments.hpp"
#include "mincut/xoperator.hpp"

namespace mincut {
namespace {

const Cut& cut_with_side(const MincutFamily& f, VertexMask side_a) {
  auto it = std::find_if(f.cuts.begin(), f.cuts.end(), [&](const Cut& c) { return c.side_a == side_a; });
  if (it == f.cuts.end()) throw std::runtime_error("no such cut");
  return *it;
}

TEST(CutStructureTest, TrivialCuts) {
  MincutFamily k4 = enumerate_mincuts(complete_graph(4));
  for (const Cut& c : k4.cuts) EXPECT_TRUE(is_trivial_cut(c));
  MincutFamily c4 = enumerate_mincuts(cycle_graph(4));
  EXPECT_FALSE(is_trivial_cut(cut_with_side(c4, 0b0011)));
  MincutFamily k2 = enumerate_mincuts(path_graph(2));
  EXPECT_TRUE(is_trivial_cut(k2.cuts[0]));
}

TEST(CutStructureTest, TrivialVertices) {
  EXPECT_EQ(trivial_vertices(complete_graph(4), 3), (std::vector<Vertex>{0, 1, 2, 3}));
  Graph wheel = wheel_graph(5);
  EXPECT_EQ(trivial_vertices(wheel, edge_connectivity(wheel)), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(trivial_vertices(path_graph(3), 1), (std::vector<Vertex>{0, 2}));
}

TEST(CutStructureTest, AttachmentVertices) {
  Graph ring = fixtures::block_ring();
  MincutFamily f = enumerate_mincuts(ring);
  const Cut& block = cut_with_side(f, 0b11111);
  EXPECT_EQ(block.edges.size(), 4u);
  EXPECT_EQ(attachment_vertices(block, Side::A), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(attachment_vertices(block, Side::B), (std::vector<Vertex>{5, 6, 17, 18}));

  MincutFamily k4 = enumerate_mincuts(complete_graph(4));
  const Cut& isolate3 = cut_with_side(k4, 0b0111);
  EXPECT_EQ(attachment_vertices(isolate3, Side::B), (std::vector<Vertex>{3}));

  MincutFamily p4 = enumerate_mincuts(path_graph(4));
  const Cut& middle = cut_with_side(p4, 0b0011);
  EXPECT_EQ(attachment_vertices(middle, Side::A), (std::vector<Vertex>{1}));
  EXPECT_EQ(attachment_vertices(middle, Side::B), (std::vector<Vertex>{2}));
}

TEST(CutStructureTest, ClassifyPairs) {
  MincutFamily c4 = enumerate_mincuts(cycle_graph(4));
  const Cut& x = cut_with_side(c4, 0b0011);
  const Cut& y = cut_with_side(c4, 0b1001);
  CutRelation rel = classify_pair(x, y);
  EXPECT_EQ(rel.kind, CutKind::Crossing);
  for (VertexMask q : rel.quadrants) EXPECT_EQ(popcount(q), 1);

  MincutFamily p3 = enumerate_mincuts(path_graph(3));
  ASSERT_EQ(p3.size(), 2u);
  EXPECT_EQ(classify_pair(p3.cuts[0], p3.cuts[1]).kind, CutKind::Nested);

  MincutFamily k4 = enumerate_mincuts(complete_graph(4));
  EXPECT_EQ(classify_pair(k4.cuts[0], k4.cuts[1]).kind, CutKind::Nested);

  try {
    classify_pair(x, x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IdenticalCuts);
  }
}

TEST(CutStructureTest, QuadrantsPartitionVertices) {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected_graph(rng, 3 + rng.below(6), 0.5);
    MincutFamily f = enumerate_mincuts(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        CutRelation rel = classify_pair(f.cuts[i], f.cuts[j]);
        VertexMask all = 0;
        for (VertexMask q : rel.quadrants) {
          EXPECT_EQ(all & q, 0u);
          all |= q;
        }
        EXPECT_EQ(all, low_bits(g.order()));
      }
    }
  }
}

TEST(CutStructureTest, CrossingValidationOnCycles) {
  for (std::size_t n : {4u, 6u}) {
    Graph g = cycle_graph(n);
    MincutFamily f = enumerate_mincuts(g);
    std::size_t crossing = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        CutRelation rel = classify_pair(f.cuts[i], f.cuts[j]);
        if (rel.kind != CutKind::Crossing) continue;
        ++crossing;
        CrossingReport r = validate_crossing(g, f, f.cuts[i], f.cuts[j], rel);
        EXPECT_TRUE(r.ok());
        EXPECT_EQ(r.boundary, (std::array<std::size_t, 4>{1, 1, 1, 1}));
        EXPECT_EQ(r.diagonal, (std::array<std::size_t, 2>{0, 0}));
        EXPECT_TRUE(r.edges_disjoint);
      }
    }
    EXPECT_GT(crossing, 0u);
  }
  MincutFamily p3 = enumerate_mincuts(path_graph(3));
  CutRelation nested = classify_pair(p3.cuts[0], p3.cuts[1]);
  EXPECT_THROW(validate_crossing(path_graph(3), p3, p3.cuts[0], p3.cuts[1], nested), Error);
}

TEST(CutStructureTest, BlockRingCrossingPair) {
  Graph g = fixtures::block_ring();
  MincutFamily f = enumerate_mincuts(g);
  EXPECT_EQ(f.lambda, 4u);
  EXPECT_EQ(f.size(), 10u);
  EXPECT_EQ(f.trivial_count(), 4u);
  const VertexMask b0 = 0x1F;
  const Cut& x = cut_with_side(f, b0 | (b0 << 5));   // blocks 0,1
  const Cut& y = cut_with_side(f, b0 | (b0 << 15));  // blocks 0,3
  CutRelation rel = classify_pair(x, y);
  ASSERT_EQ(rel.kind, CutKind::Crossing);
  CrossingReport r = validate_crossing(g, f, x, y, rel);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.boundary, (std::array<std::size_t, 4>{2, 2, 2, 2}));
  EXPECT_TRUE(verify_structure(g, f).ok());
}

TEST(CutStructureTest, NestedChainInducesPathInMincutGraph) {
  Graph g = fixtures::nested_chain(11);
  MincutFamily f = enumerate_mincuts(g);
  EXPECT_EQ(f.lambda, 3u);
  std::vector<std::size_t> chain;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.trivial[i]) chain.push_back(i);
  }
  ASSERT_EQ(chain.size(), 4u);
  std::sort(chain.begin(), chain.end(), [&](std::size_t a, std::size_t b) {
    return popcount(f.cuts[a].side_a) < popcount(f.cuts[b].side_a);
  });
  Graph x = mincut_graph(f);
  for (std::size_t a = 0; a < chain.size(); ++a) {
    for (std::size_t b = a + 1; b < chain.size(); ++b) {
      const Cut& ca = f.cuts[chain[a]];
      const Cut& cb = f.cuts[chain[b]];
      EXPECT_EQ(classify_pair(ca, cb).kind, CutKind::Nested);
      EXPECT_EQ((ca.side_a & ~cb.side_a), 0u);  // A subset of B
      EXPECT_EQ(x.adjacent(static_cast<Vertex>(chain[a]), static_cast<Vertex>(chain[b])), b == a + 1);
      EXPECT_TRUE(check_intersection_component_lemma(ca, cb));
    }
  }
  EXPECT_TRUE(verify_structure(g, f).ok());
}

TEST(CutStructureTest, IntersectionLemmaVacuousOnDisjointCuts) {
  MincutFamily p4 = enumerate_mincuts(path_graph(4));
  EXPECT_TRUE(check_intersection_component_lemma(p4.cuts[0], p4.cuts[2]));
}

TEST(CutStructureTest, ExhaustiveStructureUpToSeven) {
  std::size_t graphs = 0;
  std::size_t crossing = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    for_each_connected_class(n, [&](const Graph& g) {
      ++graphs;
      StructureReport r = verify_structure(g, enumerate_mincuts(g));
      crossing += r.crossing;
      EXPECT_TRUE(r.ok()) << to_graph6(g) << ": " << (r.violations.empty() ? "" : r.violations[0]);
    });
  }
  EXPECT_EQ(graphs, 1u + 2u + 6u + 21u + 112u + 853u);
  EXPECT_GT(crossing, 0u);
}

}  // namespace
}  // namespace mincut

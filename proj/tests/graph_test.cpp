#include <gtest/gtest.h>

#include "mincut/canonical.hpp"
#include "mincut/experiments.hpp"
#include "mincut/graph.hpp"
#include "oracles.hpp"

namespace mincut {
namespace {

void expect_well_formed(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    degree_sum += g.degree(v);
    for (Vertex w : g.neighbors(v)) {
      EXPECT_LT(w, g.order());
      EXPECT_NE(w, v);
      EXPECT_TRUE(g.adjacent(w, v));
    }
  }
  EXPECT_EQ(degree_sum, 2 * g.size());
}

TEST(GraphTest, FromEdgeListBuildsTriangle) {
  Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(are_isomorphic(g, complete_graph(3)));
  expect_well_formed(g);
}

TEST(GraphTest, NullGraph) {
  Graph g = Graph::from_edge_list(0, {});
  EXPECT_TRUE(g.empty());
  EXPECT_EQ(g, Graph{});
  EXPECT_TRUE(components(g).empty());
}

TEST(GraphTest, RejectsMalformedEdges) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of([] { Graph::from_edge_list(4, {{0, 1}, {1, 1}}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { Graph::from_edge_list(4, {{0, 1}, {1, 0}}); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { Graph::from_edge_list(2, {{0, 2}}); }), ErrorCode::IndexOutOfRange);
}

TEST(GraphTest, Components) {
  EXPECT_EQ(components(complete_graph(3)), (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
  Graph two = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(components(two), (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}}));
}

TEST(GraphTest, DegreeProfile) {
  auto c5 = degree_profile(cycle_graph(5));
  EXPECT_EQ(c5.min_degree, 2u);
  EXPECT_EQ(c5.max_degree, 2u);
  EXPECT_TRUE(c5.regular);
  auto star = degree_profile(star_graph(4));
  EXPECT_EQ(star.min_degree, 1u);
  EXPECT_EQ(star.max_degree, 3u);
  EXPECT_FALSE(star.regular);
  auto k4 = degree_profile(complete_graph(4));
  EXPECT_EQ(k4.min_degree, 3u);
  EXPECT_TRUE(k4.regular);
  EXPECT_THROW(degree_profile(Graph{}), Error);
}

TEST(GraphTest, Generators) {
  Graph k4 = complete_graph(4);
  EXPECT_EQ(k4.order(), 4u);
  EXPECT_EQ(k4.size(), 6u);
  EXPECT_TRUE(are_isomorphic(complete_bipartite_graph(2, 2), cycle_graph(4)));
  EXPECT_THROW(cycle_graph(2), Error);
  EXPECT_THROW(wheel_graph(2), Error);
  for (const Graph& g : {k4, cycle_graph(7), path_graph(5), complete_bipartite_graph(3, 4),
                         wheel_graph(6), star_graph(5)}) {
    expect_well_formed(g);
  }
}

TEST(GraphTest, WheelHasHubLast) {
  for (std::size_t rim = 3; rim <= 8; ++rim) {
    Graph w = wheel_graph(rim);
    EXPECT_EQ(w.degree(static_cast<Vertex>(rim)), rim);
    std::size_t rim_degree_three = 0;
    for (Vertex v = 0; v < rim; ++v) rim_degree_three += w.degree(v) == 3 ? 1 : 0;
    EXPECT_EQ(rim_degree_three, rim);
  }
  EXPECT_TRUE(are_isomorphic(join(complete_graph(1), cycle_graph(4)), wheel_graph(4)));
}

TEST(GraphTest, PrueferTreesAreTrees) {
  Rng rng(11);
  for (std::size_t n = 2; n <= 12; ++n) {
    Graph t = random_tree(rng, n);
    EXPECT_EQ(t.size(), n - 1);
    EXPECT_TRUE(is_connected(t));
    expect_well_formed(t);
  }
  std::vector<Vertex> star_seq{0, 0, 0};
  EXPECT_TRUE(are_isomorphic(tree_from_pruefer(star_seq), star_graph(5)));
}

TEST(GraphTest, LineGraphSmallCases) {
  EXPECT_TRUE(are_isomorphic(line_graph(complete_graph(3)), complete_graph(3)));
  EXPECT_TRUE(are_isomorphic(line_graph(path_graph(3)), complete_graph(2)));
  EXPECT_TRUE(line_graph(Graph{}).empty());
  EXPECT_TRUE(line_graph(complete_graph(1)).empty());

  Graph lk4 = line_graph(complete_graph(4));
  EXPECT_EQ(lk4.order(), 6u);
  EXPECT_EQ(lk4.size(), 12u);
  EXPECT_TRUE(degree_profile(lk4).regular);
  EXPECT_EQ(degree_profile(lk4).min_degree, 4u);
}

TEST(GraphTest, LineGraphMatchesDefinitionAndEdgeCount) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = gnp_graph(rng, 3 + rng.below(6), 0.5);
    Graph lg = line_graph(g);
    const auto expected = oracle::line_graph_adjacency(g);
    ASSERT_EQ(lg.order(), expected.size());
    for (Vertex i = 0; i < lg.order(); ++i) {
      auto nb = lg.neighbors(i);
      EXPECT_EQ(std::set<std::size_t>(nb.begin(), nb.end()), expected[i]);
    }
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) sum += g.degree(v) * (g.degree(v) - (g.degree(v) > 0)) / 2;
    EXPECT_EQ(lg.size(), sum);
    expect_well_formed(lg);
  }
}

TEST(GraphTest, CartesianProduct) {
  Graph prism = cartesian_product(complete_graph(3), complete_graph(2));
  EXPECT_EQ(prism.order(), 6u);
  EXPECT_EQ(prism.size(), 9u);
  EXPECT_TRUE(degree_profile(prism).regular);
  EXPECT_EQ(degree_profile(prism).min_degree, 3u);

  Graph c5 = cycle_graph(5);
  EXPECT_EQ(cartesian_product(complete_graph(1), c5), c5);
  EXPECT_TRUE(are_isomorphic(cartesian_product(complete_graph(2), complete_graph(2)), cycle_graph(4)));

  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = gnp_graph(rng, 1 + rng.below(4), 0.6);
    Graph h = gnp_graph(rng, 1 + rng.below(4), 0.6);
    Graph gh = cartesian_product(g, h);
    expect_well_formed(gh);
    EXPECT_TRUE(are_isomorphic(gh, cartesian_product(h, g)));
  }
}

TEST(GraphTest, Join) {
  Graph w = join(complete_graph(1), cycle_graph(4));
  EXPECT_TRUE(are_isomorphic(w, wheel_graph(4)));
  Graph prism = cartesian_product(complete_graph(3), complete_graph(2));
  Graph coned = join(complete_graph(1), prism);
  EXPECT_EQ(coned.order(), 7u);
  EXPECT_EQ(coned.size(), 15u);
  EXPECT_EQ(join(Graph{}, prism), prism);
  expect_well_formed(coned);
}

TEST(GraphTest, DiameterAndDistances) {
  EXPECT_EQ(diameter(cycle_graph(5)), 2u);
  EXPECT_EQ(diameter(path_graph(4)), 3u);
  EXPECT_EQ(diameter(complete_graph(4)), 1u);
  EXPECT_EQ(diameter(complete_graph(1)), 0u);
}

}  // namespace
}  // namespace mincut

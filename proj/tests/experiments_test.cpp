#include <gtest/gtest.h>

#include <set>

#include "mincut/experiments.hpp"
#include "mincut/json.hpp"

namespace mincut {
namespace {

TEST(RngTest, SequenceIsPinned) {
  // mt19937_64 with the default seed: the standard fixes the 10000th output.
  std::mt19937_64 reference;
  reference.discard(9999);
  EXPECT_EQ(reference(), 9981545732273789042ULL);
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(c.below(7), 7u);
    double u = c.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(EnsembleTest, AllConnectedCounts) {
  EnsembleSpec labeled3{AllConnected{3, false}, 0, 0};
  EXPECT_EQ(generate_ensemble(labeled3).size(), 4u);
  EnsembleSpec iso3{AllConnected{3, true}, 0, 0};
  EXPECT_EQ(generate_ensemble(iso3).size(), 2u);
  EnsembleSpec labeled4{AllConnected{4, false}, 0, 0};
  EXPECT_EQ(generate_ensemble(labeled4).size(), 38u);
  EnsembleSpec iso4{AllConnected{4, true}, 0, 0};
  EXPECT_EQ(generate_ensemble(iso4).size(), 6u);
  EnsembleSpec labeled5{AllConnected{5, false}, 0, 0};
  EXPECT_EQ(generate_ensemble(labeled5).size(), 728u);
}

TEST(EnsembleTest, GnpEdgeCases) {
  EnsembleSpec full{Gnp{8, 1.0}, 5, 9};
  for (const Graph& g : generate_ensemble(full)) EXPECT_EQ(g, complete_graph(8));
  EnsembleStats stats;
  EnsembleSpec empty{Gnp{4, 0.0}, 10, 9};
  EXPECT_TRUE(generate_ensemble(empty, &stats).empty());
  EXPECT_EQ(stats.drawn, 10u);
  EXPECT_EQ(stats.discarded, 10u);
}

TEST(EnsembleTest, RandomRegular) {
  EnsembleSpec spec{RandomRegular{10, 3}, 20, 5};
  EnsembleStats stats;
  auto graphs = generate_ensemble(spec, &stats);
  EXPECT_EQ(stats.drawn, 20u);
  for (const Graph& g : graphs) {
    auto p = degree_profile(g);
    EXPECT_TRUE(p.regular);
    EXPECT_EQ(p.min_degree, 3u);
  }
}

TEST(EnsembleTest, InvalidSpecs) {
  auto code = [](const EnsembleSpec& s) {
    try {
      generate_ensemble(s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code({Gnp{5, 1.5}, 1, 0}), ErrorCode::InvalidSpec);
  EXPECT_EQ(code({RandomRegular{5, 3}, 1, 0}), ErrorCode::InvalidSpec);
  EXPECT_EQ(code({AllConnected{8, true}, 0, 0}), ErrorCode::InvalidSpec);
}

TEST(EnsembleTest, DeterministicGivenSeed) {
  EnsembleSpec spec{Gnp{9, 0.35}, 50, 1234};
  auto a = generate_ensemble(spec);
  auto b = generate_ensemble(spec);
  EXPECT_EQ(a, b);
  spec.seed = 1235;
  EXPECT_NE(generate_ensemble(spec), a);
}

TEST(SurveyTest, AllConnectedFive) {
  ConvergenceReport r = survey({AllConnected{5, true}, 0, 0}, 20);
  EXPECT_EQ(r.processed(), 21u);
  EXPECT_EQ(r.count(OutcomeKind::Unresolved), 0u);
  std::set<CanonicalCode> circuit_entries;
  for (const auto& rec : r.records) {
    if (rec.circuit_entry) circuit_entries.insert(*rec.circuit_entry);
  }
  EXPECT_TRUE(circuit_entries.count(canonical_form(complete_graph(5))));
  EXPECT_TRUE(circuit_entries.count(canonical_form(line_graph(complete_graph(5)))));
}

TEST(SurveyTest, AllConnectedSixHasPrismCircuit) {
  ConvergenceReport r = survey({AllConnected{6, true}, 0, 0}, 20);
  EXPECT_EQ(r.count(OutcomeKind::Unresolved), 0u);
  const CanonicalCode prism = canonical_form(cartesian_product(complete_graph(3), complete_graph(2)));
  bool found = false;
  for (const auto& rec : r.records) {
    if (rec.input == prism) {
      found = true;
      EXPECT_EQ(rec.outcome.kind, OutcomeKind::Periodic);
      EXPECT_EQ(rec.outcome.period, 2u);
    }
  }
  EXPECT_TRUE(found);
}

TEST(SurveyTest, LabeledSweepFoldsMultiplicity) {
  ConvergenceReport r = survey({AllConnected{4, false}, 0, 0}, 20);
  EXPECT_EQ(r.processed(), 38u);
  EXPECT_EQ(r.records.size(), 6u);
  std::size_t total = 0;
  for (const auto& rec : r.records) total += rec.multiplicity;
  EXPECT_EQ(total, 38u);
}

TEST(SurveyTest, GnpReportIsReproducible) {
  EnsembleSpec spec{Gnp{10, 0.3}, 200, 77};
  ConvergenceReport a = survey(spec, 20);
  ConvergenceReport b = survey(spec, 20);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_EQ(a.stats.accepted + a.stats.discarded, 200u);
  EXPECT_EQ(a.processed(), a.stats.accepted);
  EXPECT_EQ(a.count(OutcomeKind::Unresolved), 0u);
  EXPECT_GE(a.null_fraction(), 0.0);
  EXPECT_LE(a.null_fraction(), 1.0);
  std::size_t hist = 0;
  for (const auto& [k, v] : a.steps_histogram) hist += v;
  EXPECT_EQ(hist, a.processed());
}

TEST(CensusTest, PrismsArePeriodTwo) {
  for (std::size_t n = 3; n <= 5; ++n) {
    IterationTrace t = iterate(cartesian_product(complete_graph(n), complete_graph(2)), 20);
    EXPECT_EQ(t.outcome.kind, OutcomeKind::Periodic);
    EXPECT_EQ(t.outcome.period, 2u);
  }
}

TEST(CensusTest, SmallExhaustiveCensus) {
  PeriodicityCensus five = periodicity_census({AllConnected{5, true}, 0, 0}, 20);
  for (const auto& [p, bucket] : five.periods) {
    EXPECT_TRUE(p == 1 || p == 2) << p;
    EXPECT_FALSE(bucket.exemplars.empty());
  }
  PeriodicityCensus three = periodicity_census({AllConnected{3, true}, 0, 0}, 20);
  ASSERT_EQ(three.periods.size(), 1u);
  EXPECT_EQ(three.periods.at(1).count, 1u);
  EXPECT_EQ(three.periods.at(1).exemplars.front(), to_graph6(complete_graph(3)));
  EXPECT_EQ(three.null_count, 1u);
}

TEST(CensusTest, ExemplarsReproduceTheirPeriod) {
  PeriodicityCensus six = periodicity_census({AllConnected{6, true}, 0, 0}, 20);
  for (const auto& [p, bucket] : six.periods) {
    for (const std::string& g6 : bucket.exemplars) {
      EXPECT_EQ(iterate(parse_graph6(g6), 20).outcome.period, p);
    }
  }
}

TEST(SurveyTest, FixedPointExemplarsArePredicted) {
  ConvergenceReport r = survey({AllConnected{6, true}, 0, 0}, 20);
  for (const auto& rec : r.records) {
    if (rec.outcome.kind == OutcomeKind::FixedPoint && rec.outcome.preperiod == 0) {
      Graph g = parse_graph6(rec.graph6);
      EXPECT_TRUE(classify(g).fixed_point_predicted) << rec.graph6;
    }
  }
}

TEST(SurveyTest, CsvHistogram) {
  ConvergenceReport r = survey({AllConnected{3, true}, 0, 0}, 20);
  // K_3 repeats after one step; P_3 reaches K_0 after two.
  EXPECT_EQ(histogram_csv(r), "steps,count\n1,1\n2,1\n");
}

TEST(EnsembleTest, LabeledConnectedCountAtSeven) {
  EnsembleSpec spec;
  spec.model = AllConnected{7, false};
  std::size_t seen = 0;
  const EnsembleStats stats = for_each_in_ensemble(spec, [&](const Graph&) { ++seen; });
  EXPECT_EQ(seen, 1866256u);
  EXPECT_EQ(stats.accepted, 1866256u);
}

}  // namespace
}  // namespace mincut

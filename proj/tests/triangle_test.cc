// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/triangle.h"

#include <cmath>

#include "gtest/gtest.h"
#include "motifqc/models.h"
#include "oracles.h"

namespace motifqc {
namespace {

TEST(ArboricityFilterTest, Examples) {
  const Graph forest = Graph::Path(30);
  QueryOracle a(forest);
  EXPECT_TRUE(ArboricityFilter(a, 1).accepted);
  EXPECT_EQ(a.counts().Total(), 0);
  const Graph k10 = Graph::Complete(10);
  QueryOracle b(k10);
  const FilterResult r = ArboricityFilter(b, 2);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.statistic, 9);
}

TEST(ArboricityFilterTest, AcceptsSparseGnp) {
  int accepts = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = *Sample({Gnp{500, 0.1}, seed});
    QueryOracle o(g);
    accepts += ArboricityFilter(o, 2 * 500 * 0.1).accepted;
  }
  EXPECT_GE(accepts, 90);
}

TEST(AvgDegreeFilterTest, Examples) {
  const Graph empty = Graph::Empty(200);
  QueryOracle a(empty);
  Rng r1(1);
  const FilterResult ra = *AvgDegreeFilter(a, 0.1, r1);
  EXPECT_FALSE(ra.accepted);
  EXPECT_EQ(ra.detail, "stage 1 mean degree");
  EXPECT_EQ(a.counts().degree, AvgDegreeStageOneSize(200, 0.1));

  const Graph full = Graph::Complete(200);
  QueryOracle b(full);
  Rng r2(2);
  const FilterResult rb = *AvgDegreeFilter(b, 0.1, r2);
  EXPECT_FALSE(rb.accepted);
  EXPECT_EQ(rb.statistic, 199);
  EXPECT_EQ(b.counts().list + b.counts().matrix, 0);
}

TEST(AvgDegreeFilterTest, SampleSizes) {
  EXPECT_EQ(AvgDegreeStageOneSize(1000, 0.1), static_cast<int64_t>(std::ceil(480 * std::log(1000.0))));
  // 28 (n-1) ln(2n) / (3 np/5).
  EXPECT_EQ(AvgDegreeStageTwoSize(1000, 0.1),
            static_cast<int64_t>(std::ceil(28.0 * 999 * std::log(2000.0) / (3 * 20.0))));
}

TEST(AvgDegreeFilterTest, AcceptsGnp) {
  int accepts = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    auto g = *SampleLazy({Gnp{2000, 0.05}, seed});
    QueryOracle o(*g);
    Rng rng(DeriveSeed(seed, {1}));
    accepts += AvgDegreeFilter(o, 0.05, rng)->accepted;
  }
  EXPECT_GE(accepts, 90);
}

TEST(EstimateTrianglesTest, TriangleFreeIsBelowT) {
  // Complete bipartite graphs have many wedges and no triangles.
  std::vector<Edge> edges;
  for (int a = 0; a < 20; ++a) {
    for (int b = 20; b < 40; ++b) edges.emplace_back(a, b);
  }
  const Graph g = *Graph::FromEdges(40, edges);
  QueryOracle o(g);
  Rng rng(1);
  const TriangleEstimate e = *EstimateTriangles(o, 50, 0.25, 100, true, rng);
  EXPECT_TRUE(e.below_t);
  EXPECT_EQ(e.closures, 0);
}

TEST(EstimateTrianglesTest, EmptyGraphIsBelowT) {
  const Graph g = Graph::Empty(30);
  QueryOracle o(g);
  Rng rng(1);
  EXPECT_TRUE(EstimateTriangles(o, 1, 0.25, 10, true, rng)->below_t);
}

TEST(EstimateTrianglesTest, CompleteGraphEstimate) {
  const Graph g = Graph::Complete(20);
  const double truth = 1140;  // C(20, 3) unlabeled triangles
  ASSERT_EQ(oracle::SparseTriangles(g), 1140u);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    QueryOracle o(g);
    Rng rng(seed);
    const TriangleEstimate e = *EstimateTriangles(o, 100, 0.25, 100, true, rng);
    EXPECT_FALSE(e.below_t);
    EXPECT_GT(e.estimate, 0.75 * truth);
    EXPECT_LT(e.estimate, 1.25 * truth);
  }
}

TEST(EstimateTrianglesTest, WithinRangeOnGnp) {
  int within = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    auto g = *SampleLazy({Gnp{1000, 0.1}, seed});
    const double truth = static_cast<double>(oracle::SparseTriangles(g->Materialize()));
    QueryOracle o(*g);
    Rng rng(DeriveSeed(seed, {1}));
    const double t = 0.5 * oracle::Choose(1000, 3) * 1e-3;
    const TriangleEstimate e = *EstimateTriangles(o, t, 0.25, 1e9, true, rng);
    within += !e.below_t && std::abs(e.estimate - truth) <= 0.25 * truth;
  }
  EXPECT_GE(within, 90);
}

TEST(EstimateTrianglesTest, UnbiasedOnFixedGraph) {
  const Graph g = *Sample({Gnp{500, 0.1}, 3});
  const double truth = static_cast<double>(oracle::SparseTriangles(g));
  const int runs = 10000;
  double sum = 0.0, sum_sq = 0.0;
  Rng rng(17);
  for (int i = 0; i < runs; ++i) {
    QueryOracle o(g);
    const TriangleEstimate e = *EstimateTriangles(o, 0, 0.25, 1e9, false, rng);
    sum += e.estimate;
    sum_sq += e.estimate * e.estimate;
  }
  const double mean = sum / runs;
  const double se = std::sqrt((sum_sq / runs - mean * mean) / runs);
  EXPECT_NEAR(mean, truth, 3 * se);
}

TEST(EstimateTrianglesTest, StepLimitTimesOut) {
  const Graph g = Graph::Complete(30);
  QueryOracle o(g);
  Rng rng(2);
  TriangleOptions opts;
  opts.step_limit = 200;
  const TriangleEstimate e = *EstimateTriangles(o, 100, 0.05, 100, false, rng, opts);
  EXPECT_TRUE(e.timed_out);
  EXPECT_LE(o.counts().Total(), 200);
}

TEST(EstimateTrianglesTest, ClosureTarget) {
  EXPECT_EQ(ClosureTarget(0.25, 0.1), static_cast<int64_t>(std::ceil(48 * std::log(10.0))));
  EXPECT_EQ(ClosureTarget(10, 0.5), 2);
}

TEST(TriangleQualityTest, EmptyGraphRejectsAtDegreeFilter) {
  const Graph g = Graph::Empty(500);
  QueryOracle o(g);
  Rng rng(1);
  const Verdict v = *TriangleQuality(o, 0.1, 0.4, rng);
  EXPECT_FALSE(v.accepted());
  EXPECT_EQ(v.stage, "average degree filter");
}

TEST(TriangleQualityTest, CompleteGraphRejectsAtAFilter) {
  const Graph g = Graph::Complete(300);
  for (bool degree_first : {false, true}) {
    QueryOracle o(g);
    Rng rng(1);
    TriangleOptions opts;
    opts.degree_filter_first = degree_first;
    const Verdict v = *TriangleQuality(o, 0.05, 0.4, rng, opts);
    EXPECT_FALSE(v.accepted());
    EXPECT_TRUE(v.stage == "arboricity filter" || v.stage == "average degree filter");
  }
}

TEST(TriangleQualityTest, FilterOrderDoesNotChangeDeterministicOutcomes) {
  for (const Graph& g : {Graph::Empty(400), Graph::Complete(400)}) {
    for (double p : {0.02, 0.1}) {
      QueryOracle a(g), b(g);
      Rng ra(5), rb(5);
      TriangleOptions first;
      first.degree_filter_first = true;
      EXPECT_EQ(TriangleQuality(a, p, 0.4, ra)->decision,
                TriangleQuality(b, p, 0.4, rb, first)->decision);
    }
  }
}

TEST(TriangleQualityTest, DomainAndWarnings) {
  const Graph g = Graph::Empty(50);
  QueryOracle o(g);
  Rng rng(1);
  EXPECT_FALSE(TriangleQuality(o, 0.0, 0.4, rng).ok());
  EXPECT_FALSE(TriangleQuality(o, 0.1, 1.0, rng).ok());
  const Verdict v = *TriangleQuality(o, 0.01, 0.4, rng);
  ASSERT_EQ(v.warnings.size(), 1u);
  EXPECT_EQ(v.warnings[0], "p is below 1/n");
}

TEST(TriangleQualityTest, AcceptsGnpAndQueriesMatchOracle) {
  int accepts = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    auto g = *SampleLazy({Gnp{1000, 0.08}, seed});
    QueryOracle o(*g);
    Rng rng(DeriveSeed(seed, {1}));
    const Verdict v = *TriangleQuality(o, 0.08, 0.4, rng);
    accepts += v.accepted();
    EXPECT_EQ(v.queries.Total(), o.counts().Total());
  }
  EXPECT_GE(accepts, 17);
}

}  // namespace
}  // namespace motifqc

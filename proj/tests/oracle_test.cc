// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/oracle.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace motifqc {
namespace {

TEST(QueryOracleTest, PairQueries) {
  const Graph k3 = Graph::Complete(3);
  QueryOracle o(k3);
  EXPECT_TRUE(*o.Pair(0, 1));
  EXPECT_EQ(o.counts().matrix, 1);
  const Graph empty = Graph::Empty(3);
  QueryOracle e(empty);
  EXPECT_FALSE(*e.Pair(0, 1));
  EXPECT_EQ(o.Pair(1, 1).status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(o.Pair(0, 3).ok());
}

TEST(QueryOracleTest, BudgetExhaustion) {
  const Graph k3 = Graph::Complete(3);
  QueryBudget budget;
  budget.matrix = 2;
  QueryOracle o(k3, budget);
  EXPECT_TRUE(o.Pair(0, 1).ok());
  EXPECT_TRUE(o.Pair(0, 2).ok());
  const absl::StatusOr<bool> third = o.Pair(1, 2);
  ASSERT_FALSE(third.ok());
  EXPECT_TRUE(IsBudgetError(third.status()));
  EXPECT_NE(third.status().message().find("matrix"), std::string::npos);
  EXPECT_EQ(o.counts().matrix, 2);

  QueryBudget total;
  total.total = 1;
  QueryOracle t(k3, total);
  EXPECT_TRUE(t.Degree(0).ok());
  EXPECT_TRUE(IsBudgetError(t.Neighbor(0, 1).status()));
}

TEST(QueryOracleTest, NeighborQueriesAreOneIndexed) {
  const Graph path = Graph::Path(3);
  QueryOracle o(path);
  EXPECT_EQ(*o.Neighbor(1, 2), std::optional<Vertex>(2));
  EXPECT_EQ(*o.Neighbor(0, 2), std::nullopt);
  EXPECT_EQ(o.counts().list, 2);
  const Graph k4 = Graph::Complete(4);
  QueryOracle k(k4);
  EXPECT_EQ(*k.Neighbor(3, 1), std::optional<Vertex>(0));
  EXPECT_FALSE(k.Neighbor(3, 0).ok());
}

TEST(QueryOracleTest, DegreeQueries) {
  const Graph k4 = Graph::Complete(4), empty = Graph::Empty(4), star = Graph::Star(5);
  QueryOracle a(k4), b(empty), c(star);
  EXPECT_EQ(*a.Degree(0), 3);
  EXPECT_EQ(*b.Degree(0), 0);
  EXPECT_EQ(*c.Degree(0), 4);
  EXPECT_EQ(a.counts().degree, 1);
  EXPECT_EQ(a.counts().Total(), 1);
}

TEST(QueryOracleTest, InducedOnChargesDistinctPairs) {
  const Graph k6 = Graph::Complete(6);
  QueryOracle o(k6);
  const SampledSubgraph s = *o.InducedOn({0, 1, 1, 2, 3, 0});
  EXPECT_EQ(o.counts().matrix, 6);
  EXPECT_EQ(s.graph.n(), 4);
  EXPECT_EQ(s.multiplicity, (std::vector<int64_t>{2, 2, 1, 1}));

  const Graph edge = Graph::Complete(2);
  QueryOracle one(edge);
  const SampledSubgraph single = *one.InducedOn({1, 1, 1});
  EXPECT_EQ(one.counts().matrix, 0);
  EXPECT_EQ(single.graph.n(), 1);
  const SampledSubgraph pair = *one.InducedOn({0, 0, 1});
  EXPECT_EQ(one.counts().matrix, 1);
  EXPECT_EQ(pair.graph.NumEdges(), 1);
}

TEST(QueryOracleTest, InducedOnMatchesTarget) {
  std::mt19937_64 gen(4);
  const Graph g = oracle::RandomGraph(40, 0.4, gen);
  QueryOracle o(g, {}, true);
  std::vector<Vertex> s = {5, 39, 2, 17, 5, 8};
  const SampledSubgraph sub = *o.InducedOn(s);
  for (int i = 0; i < sub.graph.n(); ++i) {
    for (int j = 0; j < sub.graph.n(); ++j) {
      if (i != j) EXPECT_EQ(sub.graph.Adjacent(i, j), g.Adjacent(sub.ids[i], sub.ids[j]));
    }
  }
  EXPECT_EQ(static_cast<int64_t>(o.log().size()), o.counts().matrix);
}

TEST(QueryOracleTest, CountersNeverDecrease) {
  std::mt19937_64 gen(6);
  const Graph g = oracle::RandomGraph(30, 0.3, gen);
  QueryOracle o(g);
  std::uniform_int_distribution<int> pick(0, 29);
  QueryCounts last;
  for (int i = 0; i < 500; ++i) {
    const Vertex u = pick(gen), v = pick(gen);
    switch (i % 3) {
      case 0:
        if (u != v) (void)o.Pair(u, v);
        break;
      case 1:
        (void)o.Neighbor(u, 1 + i % 5);
        break;
      default:
        (void)o.Degree(u);
    }
    EXPECT_GE(o.counts().matrix, last.matrix);
    EXPECT_GE(o.counts().list, last.list);
    EXPECT_GE(o.counts().degree, last.degree);
    last = o.counts();
  }
  // Repeated queries are charged each time.
  const int64_t before = o.counts().matrix;
  (void)o.Pair(0, 1);
  (void)o.Pair(0, 1);
  EXPECT_EQ(o.counts().matrix, before + 2);
}

TEST(QueryOracleTest, ReferenceReadsAreNotQueries) {
  const Graph k5 = Graph::Complete(5);
  QueryOracle o(k5);
  EXPECT_EQ(o.ReferenceDegeneracy(), 4);
  EXPECT_EQ(o.counts().Total(), 0);
  EXPECT_EQ(o.reference_reads(), 1);
}

}  // namespace
}  // namespace motifqc

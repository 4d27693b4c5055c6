// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/graph.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace motifqc {
namespace {

TEST(GraphTest, FromEdgesMergesDuplicatesAndSortsNeighbors) {
  std::vector<Edge> edges = {{2, 0}, {0, 1}, {1, 0}, {0, 3}};
  absl::StatusOr<Graph> g = Graph::FromEdges(4, edges);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->NumEdges(), 3);
  EXPECT_EQ(g->Degree(0), 3);
  const auto nb = g->Neighbors(0);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(g->Adjacent(2, 0));
  EXPECT_FALSE(g->Adjacent(1, 2));
}

TEST(GraphTest, RejectsLoopsAndOutOfRange) {
  std::vector<Edge> loop = {{1, 1}};
  EXPECT_FALSE(Graph::FromEdges(3, loop).ok());
  std::vector<Edge> far = {{0, 3}};
  EXPECT_FALSE(Graph::FromEdges(3, far).ok());
  std::vector<Edge> neg = {{-1, 2}};
  EXPECT_FALSE(Graph::FromEdges(3, neg).ok());
}

TEST(GraphTest, FactoriesHaveExpectedShape) {
  EXPECT_EQ(Graph::Complete(5).NumEdges(), 10);
  EXPECT_EQ(Graph::Empty(5).NumEdges(), 0);
  EXPECT_EQ(Graph::Path(5).NumEdges(), 4);
  EXPECT_EQ(Graph::Cycle(5).NumEdges(), 5);
  EXPECT_EQ(Graph::Star(5).Degree(0), 4);
  EXPECT_EQ(Graph::Star(5).Degree(3), 1);
}

TEST(GraphTest, NeighborIsZeroIndexedAndBounded) {
  const Graph g = Graph::Path(3);
  EXPECT_EQ(g.Neighbor(1, 0), 0);
  EXPECT_EQ(g.Neighbor(1, 1), 2);
  EXPECT_FALSE(g.Neighbor(1, 2).has_value());
  EXPECT_FALSE(g.Neighbor(0, 1).has_value());
}

TEST(GraphTest, InvariantsOnRandomGraphs) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 70;
    const Graph g = oracle::RandomGraph(n, 0.3, gen);
    int64_t degree_sum = 0;
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_FALSE(g.Adjacent(u, u));
      const auto nb = g.Neighbors(u);
      EXPECT_EQ(static_cast<int>(nb.size()), g.Degree(u));
      for (size_t i = 1; i < nb.size(); ++i) EXPECT_LT(nb[i - 1], nb[i]);
      for (Vertex v = 0; v < n; ++v) EXPECT_EQ(g.Adjacent(u, v), g.Adjacent(v, u));
      degree_sum += g.Degree(u);
    }
    EXPECT_EQ(degree_sum, 2 * g.NumEdges());
  }
}

TEST(GraphTest, InducedSubgraphKeepsOrder) {
  const Graph g = Graph::Path(5);  // 0-1-2-3-4
  std::vector<Vertex> vs = {3, 1, 2};
  const Graph sub = g.InducedSubgraph(vs);
  EXPECT_EQ(sub.n(), 3);
  EXPECT_TRUE(sub.Adjacent(0, 2));   // 3-2
  EXPECT_TRUE(sub.Adjacent(1, 2));   // 1-2
  EXPECT_FALSE(sub.Adjacent(0, 1));  // 3-1
}

TEST(GraphTest, DegeneracyOfKnownGraphs) {
  EXPECT_EQ(Degeneracy(Graph::Complete(10)), 9);
  EXPECT_EQ(Degeneracy(Graph::Path(10)), 1);
  EXPECT_EQ(Degeneracy(Graph::Cycle(10)), 2);
  EXPECT_EQ(Degeneracy(Graph::Star(10)), 1);
  EXPECT_EQ(Degeneracy(Graph::Empty(4)), 0);
}

TEST(MotifTest, ParseAndPrintRoundTrip) {
  absl::StatusOr<Motif> h = Motif::Parse("4:0-1,1-2,2-3");
  ASSERT_TRUE(h.ok());
  EXPECT_EQ(*h, Motif::Path(4));
  EXPECT_EQ(*Motif::Parse(h->ToString()), *h);
  EXPECT_EQ(Motif::Parse("3:")->NumEdges(), 0);
  EXPECT_FALSE(Motif::Parse("3:0-0").ok());
  EXPECT_FALSE(Motif::Parse("3:0-5").ok());
  EXPECT_FALSE(Motif::Parse("x").ok());
}

TEST(MotifTest, DegreesAndInducedSubMotifs) {
  const Motif star = Motif::Star(4);
  EXPECT_EQ(star.MaxDegree(), 3);
  EXPECT_EQ(star.LabelDegree(0), 3);
  EXPECT_EQ(star.NumEdges(), 3);
  // Labels {1, 2, 3} of a star are the leaves.
  EXPECT_EQ(star.InducedOn(0b1110).NumEdges(), 0);
  EXPECT_EQ(star.InducedOn(0b0011), Motif::Complete(2));
}

TEST(MotifTest, CollapseCountsMultiplicity) {
  std::vector<Vertex> s = {4, 1, 4, 4, 2};
  const DistinctVertices d = Collapse(s);
  EXPECT_EQ(d.vertices, (std::vector<Vertex>{1, 2, 4}));
  EXPECT_EQ(d.multiplicity, (std::vector<int64_t>{1, 1, 3}));
}

}  // namespace
}  // namespace motifqc

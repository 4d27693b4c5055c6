// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/counting.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace motifqc {
namespace {

std::vector<Motif> AllMotifs(int max_k) {
  std::vector<Motif> out;
  for (int k = 1; k <= max_k; ++k) {
    for (uint64_t m = 0; m < (uint64_t{1} << Motif::NumPairs(k)); ++m) {
      out.push_back(Motif::FromMask(k, m));
    }
  }
  return out;
}

TEST(CountingTest, CliqueExamples) {
  EXPECT_EQ(*CountCliques(Graph::Complete(3), 3), 6u);
  EXPECT_EQ(*CountCliques(Graph::Complete(4), 3), 24u);
  EXPECT_EQ(*CountCliques(Graph::Cycle(5), 3), 0u);
}

TEST(CountingTest, InducedExamples) {
  const Motif edge = Motif::Complete(2);
  EXPECT_EQ(*CountLabeledInduced(Graph::Path(3), edge), 4u);
  EXPECT_EQ(*CountLabeledInduced(Graph::Complete(3), Motif::Path(3)), 0u);
  EXPECT_EQ(*CountLabeledInduced(Graph::Path(3), Motif::Path(3)), 2u);
}

TEST(CountingTest, NoninducedExamples) {
  EXPECT_EQ(*CountLabeledNoninduced(Graph::Complete(3), Motif::Complete(2)), 6u);
  EXPECT_EQ(*CountLabeledNoninduced(Graph::Complete(3), Motif::Path(3)), 6u);
  EXPECT_EQ(*CountLabeledNoninduced(Graph::Empty(6), Motif::Path(4)), 0u);
}

TEST(CountingTest, MultisetExamples) {
  const Graph edge = Graph::Complete(2);
  EXPECT_EQ(*CountInMultiset(edge, {0, 0, 1}, Motif::Complete(2)), 4u);
  EXPECT_EQ(*CountInMultiset(edge, {0, 0}, Motif::Complete(2)), 0u);
  EXPECT_EQ(*CountInMultiset(Graph::Complete(3), {0, 1, 2}, Motif::Complete(3)), 6u);
  EXPECT_FALSE(CountInMultiset(edge, {0, 5}, Motif::Complete(2)).ok());
}

TEST(CountingTest, CapIsEnforced) {
  const Graph g = Graph::Complete(10);
  EXPECT_EQ(CountCliques(g, 9).status().code(), absl::StatusCode::kOutOfRange);
  EXPECT_TRUE(CountCliques(g, 9, Exec::kSerial, 10).ok());
  EXPECT_EQ(CountLabeledInduced(g, Motif::Complete(9)).status().code(),
            absl::StatusCode::kOutOfRange);
}

// Every graph on up to 5 vertices against every motif on up to 4 labels.
TEST(CountingTest, MatchesBruteForceExhaustively) {
  const std::vector<Motif> motifs = AllMotifs(4);
  for (int n = 1; n <= 5; ++n) {
    for (uint64_t code = 0; code < (uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      const Graph g = oracle::GraphFromCode(n, code);
      for (const Motif& h : motifs) {
        ASSERT_EQ(*CountLabeledInduced(g, h, Exec::kSerial), oracle::LabeledCount(g, h, true))
            << h.ToString() << " n=" << n << " code=" << code;
        ASSERT_EQ(*CountLabeledNoninduced(g, h, Exec::kSerial),
                  oracle::LabeledCount(g, h, false))
            << h.ToString() << " n=" << n << " code=" << code;
      }
      for (int ell = 1; ell <= 4; ++ell) {
        ASSERT_EQ(*CountCliques(g, ell, Exec::kSerial), oracle::LabeledCliques(g, ell));
      }
    }
  }
}

TEST(CountingTest, WeightedMultisetCountsMatchBruteForce) {
  std::mt19937_64 gen(5);
  const std::vector<Motif> motifs = AllMotifs(4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = oracle::RandomGraph(n, 0.5, gen);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Vertex> s(3 + trial % 5);
    for (Vertex& v : s) v = pick(gen);
    for (const Motif& h : motifs) {
      if (h.k() > static_cast<int>(s.size())) continue;
      for (bool induced : {true, false}) {
        ASSERT_EQ(*CountInMultiset(g, s, h, induced), oracle::MultisetCount(g, s, h, induced))
            << h.ToString();
      }
    }
  }
}

TEST(CountingTest, SerialAndParallelAgree) {
  std::mt19937_64 gen(3);
  const Graph g = oracle::RandomGraph(150, 0.3, gen);
  for (const Motif& h : {Motif::Complete(3), Motif::Path(4), Motif::Star(4), Motif::Cycle(4),
                         Motif::Empty(3)}) {
    EXPECT_EQ(*CountLabeledInduced(g, h, Exec::kSerial),
              *CountLabeledInduced(g, h, Exec::kParallel));
    EXPECT_EQ(*CountLabeledNoninduced(g, h, Exec::kSerial),
              *CountLabeledNoninduced(g, h, Exec::kParallel));
  }
  EXPECT_EQ(*CountCliques(g, 4, Exec::kSerial), *CountCliques(g, 4, Exec::kParallel));
}

TEST(CountingTest, CliquesEqualCompleteMotifCounts) {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = oracle::RandomGraph(40, 0.5, gen);
    for (int ell = 1; ell <= 5; ++ell) {
      EXPECT_EQ(*CountCliques(g, ell), *CountLabeledInduced(g, Motif::Complete(ell)));
    }
  }
}

TEST(CountingTest, RepetitionFreeMultisetEqualsGlobalCount) {
  std::mt19937_64 gen(21);
  const Graph g = oracle::RandomGraph(12, 0.4, gen);
  std::vector<Vertex> all(12);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), gen);
  for (const Motif& h : AllMotifs(4)) {
    EXPECT_EQ(*CountInMultiset(g, all, h), *CountLabeledInduced(g, h));
  }
}

TEST(CountingTest, InclusionExclusionIdentity) {
  std::mt19937_64 gen(1234);
  const std::vector<Motif> motifs = AllMotifs(4);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 8;
    const Graph g = oracle::RandomGraph(n, 0.5, gen);
    for (const Motif& h : motifs) {
      int64_t sum = 0;
      const auto groups = SupergraphsSameVertices(h);
      for (size_t i = 0; i < groups.size(); ++i) {
        for (const Motif& sup : groups[i]) {
          const int64_t c = static_cast<int64_t>(*CountLabeledNoninduced(g, sup));
          sum += (i % 2 == 0) ? c : -c;
        }
      }
      ASSERT_EQ(sum, static_cast<int64_t>(*CountLabeledInduced(g, h))) << h.ToString();
    }
  }
}

TEST(SubmotifTest, SubgraphsOnExamples) {
  const std::vector<Motif> tri2 = *SubgraphsOn(Motif::Complete(3), 2);
  ASSERT_EQ(tri2.size(), 3u);
  for (const Motif& m : tri2) EXPECT_EQ(m, Motif::Complete(2));
  EXPECT_EQ(*SubgraphsOn(Motif::Complete(3), 3), std::vector<Motif>{Motif::Complete(3)});
  // Path 0-1-2: pairs {0,1}, {0,2}, {1,2}.
  const std::vector<Motif> p2 = *SubgraphsOn(Motif::Path(3), 2);
  ASSERT_EQ(p2.size(), 3u);
  int edges = 0;
  for (const Motif& m : p2) edges += m.NumEdges();
  EXPECT_EQ(edges, 2);
  EXPECT_FALSE(SubgraphsOn(Motif::Path(3), 4).ok());
  EXPECT_EQ(LabelSubsets(4, 2).size(), 6u);
}

TEST(SubmotifTest, SupergraphExamples) {
  auto flat = [](const std::vector<std::vector<Motif>>& g) {
    std::vector<Motif> out;
    for (const auto& grp : g) out.insert(out.end(), grp.begin(), grp.end());
    return out;
  };
  EXPECT_EQ(flat(SupergraphsSameVertices(Motif::Complete(3))),
            std::vector<Motif>{Motif::Complete(3)});
  EXPECT_EQ(flat(SupergraphsSameVertices(Motif::Complete(2))),
            std::vector<Motif>{Motif::Complete(2)});
  const auto p3 = SupergraphsSameVertices(Motif::Path(3));
  ASSERT_EQ(p3.size(), 2u);
  EXPECT_EQ(p3[0], std::vector<Motif>{Motif::Path(3)});
  EXPECT_EQ(p3[1], std::vector<Motif>{Motif::Complete(3)});
  // Empty motif on 4 labels: C(6, i) supersets with i added edges.
  const auto e4 = SupergraphsSameVertices(Motif::Empty(4));
  ASSERT_EQ(e4.size(), 7u);
  EXPECT_EQ(e4[2].size(), 15u);
}

TEST(MotifStatsTest, Examples) {
  EXPECT_DOUBLE_EQ(ComputeMotifStats(Motif::Complete(3)).sigma, 3.0);
  EXPECT_DOUBLE_EQ(ComputeMotifStats(Motif::Complete(2)).sigma, 2.0);
  EXPECT_DOUBLE_EQ(ComputeMotifStats(Motif::Complete(4)).m_h, 1.5);
  EXPECT_EQ(ComputeMotifStats(Motif::Star(5)).max_degree, 4);
  // The complete graph on the same labels is always a superset.
  EXPECT_DOUBLE_EQ(ComputeMotifStats(Motif::Path(4)).m_h_star, 1.5);
  EXPECT_EQ(LineGraph(Motif::Path(4)).NumEdges(), 2);
}

TEST(MotifStatsTest, CliqueSigmaIsK) {
  for (int k = 2; k <= 6; ++k) EXPECT_DOUBLE_EQ(ComputeMotifStats(Motif::Complete(k)).sigma, k);
}

TEST(MotifStatsTest, SigmaAtMostMaxDegreePlusTwo) {
  for (int k = 1; k <= 6; ++k) {
    for (uint64_t m = 0; m < (uint64_t{1} << Motif::NumPairs(k)); ++m) {
      const Motif h = Motif::FromMask(k, m);
      const MotifStats st = ComputeMotifStats(h);
      ASSERT_LE(st.sigma, st.max_degree + 2.0 + 1e-12) << h.ToString();
    }
  }
}

}  // namespace
}  // namespace motifqc

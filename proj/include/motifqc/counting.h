// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MOTIFQC_COUNTING_H_
#define MOTIFQC_COUNTING_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "motifqc/graph.h"

namespace motifqc {

inline constexpr int kDefaultMotifCap = 8;

// Kernels take an execution policy. kSerial is the reference path; kParallel
// splits the outermost loop across OpenMP threads. Both return identical
// results.
enum class Exec { kSerial, kParallel };

// All counts are labeled: ordered tuples of distinct vertices.
absl::StatusOr<uint64_t> CountCliques(const Graph& g, int ell,
                                      Exec exec = Exec::kParallel,
                                      int cap = kDefaultMotifCap);
absl::StatusOr<uint64_t> CountLabeledInduced(const Graph& g, const Motif& h,
                                             Exec exec = Exec::kParallel,
                                             int cap = kDefaultMotifCap);
absl::StatusOr<uint64_t> CountLabeledNoninduced(const Graph& g, const Motif& h,
                                                Exec exec = Exec::kParallel,
                                                int cap = kDefaultMotifCap);

// Copies of h counted over position tuples of s with distinct vertex values,
// i.e. the sum over labeled copies of the product of multiplicities.
absl::StatusOr<uint64_t> CountInMultiset(const Graph& g, const VertexMultiset& s,
                                         const Motif& h, bool induced = true,
                                         int cap = kDefaultMotifCap);

// Weighted variants over an already materialized subgraph whose vertex i has
// weight weights[i] >= 1. An empty weight span means all ones.
uint64_t WeightedMotifCount(const Graph& g, absl::Span<const int64_t> weights,
                            const Motif& h, bool induced,
                            Exec exec = Exec::kParallel);
uint64_t WeightedCliqueCount(const Graph& g, absl::Span<const int64_t> weights,
                             int ell, Exec exec = Exec::kParallel);

// One induced sub-motif per ell-subset of labels, relabeled in label order.
absl::StatusOr<std::vector<Motif>> SubgraphsOn(const Motif& h, int ell);
// Label masks matching SubgraphsOn's order.
std::vector<uint32_t> LabelSubsets(int k, int ell);

// Motifs on h.k() labels containing h's edges; entry i holds those with i
// added edges.
std::vector<std::vector<Motif>> SupergraphsSameVertices(const Motif& h);

struct MotifStats {
  int max_degree = 0;
  double m_h = 0.0;
  double m_h_star = 0.0;
  double sigma = 0.0;
  int line_graph_degeneracy = 0;
  int line_graph_max_degree = 0;
};
MotifStats ComputeMotifStats(const Motif& h);

// Line graph of a motif as a Graph on its edges (in Motif::Edges() order).
Graph LineGraph(const Motif& h);

}  // namespace motifqc

#endif  // MOTIFQC_COUNTING_H_

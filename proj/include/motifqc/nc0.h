// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MOTIFQC_NC0_H_
#define MOTIFQC_NC0_H_

#include <cstdint>
#include <map>
#include <vector>

#include "absl/status/statusor.h"
#include "motifqc/graph.h"
#include "motifqc/oracle.h"
#include "motifqc/rng.h"
#include "motifqc/testers.h"

namespace motifqc {

// Edge indicator of the pair {a, b}, or its negation.
struct Literal {
  Vertex a = 0;
  Vertex b = 0;
  bool positive = true;
};

// Conjunction of literals.
using Term = std::vector<Literal>;

// Sum over terms of the conjunctions, on graphs with n vertices.
struct NC0Terms {
  int n = 0;
  std::vector<Term> terms;
};

inline constexpr int kMaxPairsPerTerm = 4;

// Largest number of distinct pairs any term touches.
int SupportPairs(const NC0Terms& terms);

absl::StatusOr<int64_t> Nc0Evaluate(const NC0Terms& terms, const Graph& g);

// For each term, the number of injections of its vertices into V(g) that
// satisfy its literals equals the sum over the returned motifs of
// coefficient * C_H(g). Motifs live on the term's vertices relabeled in
// ascending order.
absl::StatusOr<std::map<Motif, int64_t>> Nc0Decompose(const NC0Terms& terms);

// Average of Nc0Evaluate over all vertex relabelings of g:
// sum over terms of (pattern count) (n - v_T)! / n!.
absl::StatusOr<double> Nc0Symmetrized(const NC0Terms& terms, const Graph& g);

// Runs the induced efficient motif tester on every motif on 2..2k labels,
// where k is the support pair count.
absl::StatusOr<Verdict> GraphParameterQuality(QueryOracle& oracle, const NC0Terms& terms,
                                              double p, double eps,
                                              const EfficientOverrides& overrides,
                                              Rng& rng);

}  // namespace motifqc

#endif  // MOTIFQC_NC0_H_

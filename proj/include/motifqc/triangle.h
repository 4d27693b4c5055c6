// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MOTIFQC_TRIANGLE_H_
#define MOTIFQC_TRIANGLE_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "motifqc/oracle.h"
#include "motifqc/rng.h"
#include "motifqc/testers.h"

namespace motifqc {

// Triangle counts in this module are unlabeled.
struct TriangleOptions {
  int64_t step_limit = 1'000'000;  // oracle operations per estimator run
  double prefix_factor = 2.0;      // degree prefix table holds ceil(f sqrt(n)) ids
  double failure = 0.1;
  bool degree_filter_first = false;
};

struct FilterResult {
  bool accepted = true;
  double statistic = 0.0;
  double low = 0.0;
  double high = 0.0;
  std::string detail;
};

// Reference: accept iff degeneracy <= 2 alpha. Reads the graph through the
// oracle's unmetered reference path.
FilterResult ArboricityFilter(QueryOracle& oracle, double alpha);

// Two-stage uniform degree sampling; accept iff the stage-2 mean degree lies
// in [np/3, 3np].
absl::StatusOr<FilterResult> AvgDegreeFilter(QueryOracle& oracle, double p, Rng& rng);
int64_t AvgDegreeStageOneSize(int64_t n, double p);
int64_t AvgDegreeStageTwoSize(int64_t n, double p);

struct TriangleEstimate {
  bool below_t = false;
  bool timed_out = false;
  double estimate = 0.0;
  int64_t wedges = 0;
  int64_t closures = 0;
};

// Wedge sampling from a degree prefix table, stopped after a fixed number
// of closed wedges. With allow_below_t, a run that hits its wedge cap with a
// low running estimate reports below_t.
absl::StatusOr<TriangleEstimate> EstimateTriangles(QueryOracle& oracle, double t,
                                                   double delta, double alpha_prime,
                                                   bool allow_below_t, Rng& rng,
                                                   const TriangleOptions& options = {});
int64_t ClosureTarget(double delta, double failure);

absl::StatusOr<Verdict> TriangleQuality(QueryOracle& oracle, double p, double eps, Rng& rng,
                                        const TriangleOptions& options = {});

}  // namespace motifqc

#endif  // MOTIFQC_TRIANGLE_H_

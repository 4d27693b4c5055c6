// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MOTIFQC_TESTERS_H_
#define MOTIFQC_TESTERS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "motifqc/graph.h"
#include "motifqc/oracle.h"
#include "motifqc/params.h"
#include "motifqc/rng.h"

namespace motifqc {

enum class Decision { kAccept, kReject };

struct Check {
  std::string subject;  // motif text, "degree" or "codegree"
  int level = 0;
  double observed = 0.0;
  double low = 0.0;
  double high = 0.0;
  bool passed = true;
};

struct Verdict {
  Decision decision = Decision::kAccept;
  std::string stage;
  std::optional<Check> failing;
  std::vector<Check> checks;  // every evaluated check, in order
  QueryCounts queries;        // charged during this run
  double wall_seconds = 0.0;
  std::vector<std::string> warnings;

  bool accepted() const { return decision == Decision::kAccept; }
};

// Draws s ids uniformly with repetition.
VertexMultiset DrawMultiset(Rng& rng, int n, int64_t s);

absl::StatusOr<Verdict> CliqueQuality(QueryOracle& oracle, const ParamTable& table,
                                      Rng& rng);
// Same decision rule on a caller-supplied multiset.
absl::StatusOr<Verdict> CliqueQualityOnMultiset(QueryOracle& oracle,
                                                const ParamTable& table,
                                                const VertexMultiset& s);

absl::StatusOr<Verdict> CliqueQualityEfficient(QueryOracle& oracle,
                                               const ParamTable& table, Rng& rng);

absl::StatusOr<Verdict> MotifQuality(QueryOracle& oracle, const DistributionTable& dist,
                                     const ParamTable& table, Rng& rng);
absl::StatusOr<Verdict> MotifQualityOnMultiset(QueryOracle& oracle,
                                               const DistributionTable& dist,
                                               const ParamTable& table,
                                               const VertexMultiset& s);

// Calibration knobs shared by the efficient motif testers.
struct EfficientOverrides {
  std::optional<int64_t> s_star;
  std::optional<double> delta;
  // Replaces eps / 2^(k(k-1)) in the induced tester.
  std::optional<double> inner_eps;
  double c_const = 1.0;
};

absl::StatusOr<Verdict> NoninducedMotifQualityEfficient(QueryOracle& oracle,
                                                        const Motif& h,
                                                        const ParamTable& table,
                                                        Rng& rng);

// Runs the noninduced tester on every edge-superset of h with tolerance
// eps / 2^(k(k-1)).
absl::StatusOr<Verdict> InducedMotifQualityEfficient(QueryOracle& oracle, const Motif& h,
                                                     double p, double eps,
                                                     const EfficientOverrides& overrides,
                                                     Rng& rng);
double InducedInnerTolerance(int k, double eps);

}  // namespace motifqc

#endif  // MOTIFQC_TESTERS_H_

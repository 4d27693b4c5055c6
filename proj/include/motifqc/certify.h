// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MOTIFQC_CERTIFY_H_
#define MOTIFQC_CERTIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "motifqc/counting.h"
#include "motifqc/graph.h"

namespace motifqc {

struct QuasirandomnessSpec {
  Motif motif;
  double tolerance = 0.1;  // relative deviation allowed
  double rate = 0.0;       // exponent alpha in 4^(ell+1) exp(-alpha s)
  int64_t min_size = 1;
  int trials = 100;
  double density = 1.0;    // F_D(P); S_D(P, s) = C(n,ell) ell! F_D(P) A(s, ell, n)
  bool induced = true;
};

struct ExpQrResult {
  double deviation_rate = 0.0;
  double bound = 0.0;
  double standard_error = 0.0;
  double expected = 0.0;
  bool satisfied = false;
};

// Motif counts inside `trials` independent multisets of size s; trial t uses
// the stream DeriveSeed(seed, {t}).
std::vector<double> SampleMultisetCounts(const Graph& g, const Motif& h, int64_t s,
                                         int trials, uint64_t seed, bool induced = true,
                                         Exec exec = Exec::kParallel);
double DeviationRate(const std::vector<double>& counts, double expected, double tolerance);

absl::StatusOr<ExpQrResult> EmpiricalExpQr(const Graph& g, const QuasirandomnessSpec& spec,
                                           int64_t s, uint64_t seed,
                                           Exec exec = Exec::kParallel);

struct JumbledOffender {
  std::string kind;  // "degree" or "codegree"
  Vertex u = -1;
  Vertex v = -1;
  double value = 0.0;
  double low = 0.0;
  double high = 0.0;
};

struct JumbledReport {
  bool passed = true;
  std::optional<JumbledOffender> worst;
  double implied_beta = 0.0;
};

// n sqrt(3 delta) + sqrt(n (delta + p)).
double ImpliedJumbledness(int64_t n, double p, double delta);

// Degrees in (n-1)(p +- delta) and codegrees in (n-2)(p^2 +- delta). On
// failure the worst offender is taken from the first failing kind.
JumbledReport JumblednessDegCodeg(const Graph& g, double p, double delta,
                                  Exec exec = Exec::kParallel);

inline constexpr int kExhaustiveJumbledMaxN = 12;

// Smallest beta with |e(X,Y) - p|X||Y|| <= beta sqrt(|X||Y|) over all
// nonempty X, Y; e(X,Y) counts each unordered edge once.
absl::StatusOr<double> JumblednessExhaustive(const Graph& g, double p);

}  // namespace motifqc

#endif  // MOTIFQC_CERTIFY_H_

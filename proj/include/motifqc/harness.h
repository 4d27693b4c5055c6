// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MOTIFQC_HARNESS_H_
#define MOTIFQC_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "motifqc/graph.h"
#include "motifqc/models.h"
#include "motifqc/nc0.h"
#include "motifqc/oracle.h"
#include "motifqc/params.h"
#include "motifqc/rng.h"
#include "motifqc/testers.h"
#include "motifqc/triangle.h"

namespace motifqc {

enum class Algorithm {
  kClique,
  kCliqueEfficient,
  kMotif,
  kMotifEfficient,  // noninduced
  kMotifInduced,
  kTriangle,
  kGraphParameter,
};

std::string AlgorithmName(Algorithm alg);
absl::StatusOr<Algorithm> ParseAlgorithm(const std::string& name);

struct TesterConfig {
  Algorithm alg = Algorithm::kClique;
  int k = 3;                  // clique size
  Motif motif = Motif::Complete(3);
  double p = 0.5;
  double eps = 0.3;
  ScaleMode mode = ScaleMode::kPaper;
  std::optional<int64_t> s_star;
  std::optional<double> delta;
  std::optional<double> inner_eps;
  double c_const = 1.0;
  bool per_level_thresholds = false;
  // Null model for the motif tester; G(n, p) when absent.
  std::optional<Sbm> sbm_null;
  TriangleOptions triangle;
  NC0Terms terms;
};

// A tester with its schedule resolved for graphs on n vertices.
struct PreparedTester {
  TesterConfig config;
  int n = 0;
  ParamTable table;
  std::optional<DistributionTable> dist;
};

absl::StatusOr<PreparedTester> PrepareTester(const TesterConfig& config, int n);
absl::StatusOr<Verdict> RunTester(const PreparedTester& tester, QueryOracle& oracle, Rng& rng);

struct ExperimentSpec {
  TesterConfig tester;
  ModelVariant yes;
  std::vector<ModelVariant> no;
  int trials = 100;
  uint64_t seed = 0;
  std::vector<int64_t> budgets;  // strictly increasing; used by BudgetSweep
  bool exhaustion_accepts = true;
};

absl::Status ValidateExperiment(const ExperimentSpec& spec);

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

// 95% interval: normal approximation, Wilson score below 20 trials.
Interval RateInterval(int64_t successes, int64_t trials);

struct ModelRate {
  std::string model;
  int trials = 0;
  int accepts = 0;
  int rejects = 0;
  int errors = 0;        // never folded into accepts or rejects
  double rate = 0.0;     // accepts / (accepts + rejects)
  double error_rate = 0.0;
  double standard_error = 0.0;
  Interval interval;
  std::vector<Verdict> verdicts;  // by trial; failed trials hold a default Verdict
  std::vector<bool> failed;
};

// Trial t on model m uses graph seed DeriveSeed(seed, {m, t}) and tester
// stream DeriveSeed(seed, {m, t, 1}); m = 0 is the YES model.
uint64_t TrialGraphSeed(uint64_t seed, int model_index, int trial);
uint64_t TrialTesterSeed(uint64_t seed, int model_index, int trial);

// Rates for the YES model followed by each NO model.
absl::StatusOr<std::vector<ModelRate>> RateExperiment(const ExperimentSpec& spec,
                                                      Exec exec = Exec::kParallel);

struct SweepRow {
  int64_t budget = 0;
  double yes_rate = 0.0;
  double no_rate = 0.0;
  double gap = 0.0;
  double bound = 0.0;  // 2 q ell / (n - ell)
  double yes_se = 0.0;
  double no_se = 0.0;
};

// Largest s with C(s, 2) <= q.
int64_t SampleSizeForBudget(int64_t q);

// Runs the tester under a hard budget q for each q, against the YES model and
// the first NO model, which must carry a planted size. The tester's sample is
// fitted to the budget with SampleSizeForBudget.
absl::StatusOr<std::vector<SweepRow>> BudgetSweep(const ExperimentSpec& spec,
                                                  Exec exec = Exec::kParallel);

// LF-terminated CSV with a leading "# " comment line holding `config`.
std::string SweepCsv(const std::vector<SweepRow>& rows, const std::string& config);

enum class CountPath { kQc, kExact };

struct AvgCaseResult {
  double estimate = 0.0;
  CountPath path = CountPath::kQc;
  QueryCounts queries;
  Verdict verdict;
};

// Runs the motif tester against G(n, p); on accept returns the G(n, p)
// expectation, on reject reads every pair and counts exactly.
absl::StatusOr<AvgCaseResult> AvgCaseCount(QueryOracle& oracle, const Motif& h, double p,
                                           const ParamTable& table, Rng& rng);

// Labeled induced count of h divided by its G(n, p) expectation.
absl::StatusOr<double> MotifRatio(const Graph& g, const Motif& h, double p);

}  // namespace motifqc

#endif  // MOTIFQC_HARNESS_H_

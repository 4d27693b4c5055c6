// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/harness.h"

#include <cmath>
#include <cstdio>
#include <memory>
#include <numeric>

#include "absl/status/status.h"
#include "motifqc/counting.h"

namespace motifqc {
namespace {

bool UsesTable(Algorithm alg) {
  return alg == Algorithm::kClique || alg == Algorithm::kCliqueEfficient ||
         alg == Algorithm::kMotif || alg == Algorithm::kMotifEfficient;
}

// Testers whose only cost is C(d, 2) for d distinct sampled ids.
bool FitsSampleToBudget(Algorithm alg) {
  return alg == Algorithm::kClique || alg == Algorithm::kMotif;
}

absl::StatusOr<std::unique_ptr<AdjacencySource>> BuildSource(const ModelSpec& spec) {
  if (!std::holds_alternative<DRegular>(spec.model)) return SampleLazy(spec);
  absl::StatusOr<Graph> g = Sample(spec, Exec::kSerial);
  if (!g.ok()) return g.status();
  return std::unique_ptr<AdjacencySource>(std::make_unique<Graph>(*std::move(g)));
}

struct TrialOutcome {
  absl::Status status;
  Verdict verdict;
};

TrialOutcome RunTrial(const PreparedTester& tester, const ModelVariant& model,
                      uint64_t graph_seed, uint64_t tester_seed, const QueryBudget& budget,
                      bool exhaustion_accepts) {
  TrialOutcome out;
  absl::StatusOr<std::unique_ptr<AdjacencySource>> src = BuildSource({model, graph_seed});
  if (!src.ok()) {
    out.status = src.status();
    return out;
  }
  QueryOracle oracle(**src, budget);
  Rng rng(tester_seed);
  absl::StatusOr<Verdict> v = RunTester(tester, oracle, rng);
  if (v.ok()) {
    out.verdict = *std::move(v);
  } else if (IsBudgetError(v.status())) {
    out.verdict.decision = exhaustion_accepts ? Decision::kAccept : Decision::kReject;
    out.verdict.stage = "budget exhausted";
    out.verdict.queries = oracle.counts();
  } else {
    out.status = v.status();
  }
  return out;
}

absl::StatusOr<ModelRate> RunModel(const ExperimentSpec& spec, const TesterConfig& config,
                                   int model_index, const ModelVariant& model,
                                   const QueryBudget& budget, Exec exec) {
  if (absl::Status st = Validate({model, 0}); !st.ok()) return st;
  absl::StatusOr<PreparedTester> tester = PrepareTester(config, ModelVertexCount(model));
  if (!tester.ok()) return tester.status();
  std::vector<TrialOutcome> outcomes(spec.trials);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::kParallel)
  for (int t = 0; t < spec.trials; ++t) {
    outcomes[t] = RunTrial(*tester, model, TrialGraphSeed(spec.seed, model_index, t),
                           TrialTesterSeed(spec.seed, model_index, t), budget,
                           spec.exhaustion_accepts);
  }
  ModelRate r;
  r.model = ModelName(model);
  r.trials = spec.trials;
  for (TrialOutcome& o : outcomes) {
    r.failed.push_back(!o.status.ok());
    if (!o.status.ok()) {
      ++r.errors;
    } else if (o.verdict.accepted()) {
      ++r.accepts;
    } else {
      ++r.rejects;
    }
    r.verdicts.push_back(std::move(o.verdict));
  }
  const int decided = r.accepts + r.rejects;
  r.error_rate = static_cast<double>(r.errors) / r.trials;
  if (decided > 0) {
    r.rate = static_cast<double>(r.accepts) / decided;
    r.standard_error = std::sqrt(r.rate * (1.0 - r.rate) / decided);
    r.interval = RateInterval(r.accepts, decided);
  }
  return r;
}

}  // namespace

std::string AlgorithmName(Algorithm alg) {
  switch (alg) {
    case Algorithm::kClique: return "clique";
    case Algorithm::kCliqueEfficient: return "clique_efficient";
    case Algorithm::kMotif: return "motif";
    case Algorithm::kMotifEfficient: return "motif_efficient";
    case Algorithm::kMotifInduced: return "motif_induced";
    case Algorithm::kTriangle: return "triangle";
    case Algorithm::kGraphParameter: return "graph_parameter";
  }
  return "unknown";
}

absl::StatusOr<Algorithm> ParseAlgorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kClique, Algorithm::kCliqueEfficient, Algorithm::kMotif,
                      Algorithm::kMotifEfficient, Algorithm::kMotifInduced,
                      Algorithm::kTriangle, Algorithm::kGraphParameter}) {
    if (AlgorithmName(a) == name) return a;
  }
  return absl::InvalidArgumentError("unknown algorithm: " + name);
}

absl::StatusOr<PreparedTester> PrepareTester(const TesterConfig& config, int n) {
  if (config.mode == ScaleMode::kPaper && (config.s_star || config.delta || config.inner_eps)) {
    return absl::InvalidArgumentError("paper mode forbids s_star, delta and inner_eps overrides");
  }
  if (n < 1) return absl::InvalidArgumentError("graph must have a vertex");
  PreparedTester t;
  t.config = config;
  t.n = n;
  absl::StatusOr<ParamTable> table = absl::InternalError("no schedule");
  switch (config.alg) {
    case Algorithm::kClique:
      table = CliqueSchedule(config.k, config.p, config.eps);
      break;
    case Algorithm::kCliqueEfficient:
      table = EfficientSchedule(config.k, config.p, config.eps, config.c_const);
      break;
    case Algorithm::kMotif: {
      absl::StatusOr<DistributionTable> dist =
          config.sbm_null ? SbmTable(config.motif, config.sbm_null->sizes, config.sbm_null->probs)
                          : GnpTable(config.motif, n, config.p);
      if (!dist.ok()) return dist.status();
      if (dist->n != n) return absl::InvalidArgumentError("null model size differs from graph");
      t.dist = *std::move(dist);
      table = GeneralSchedule(*t.dist, config.eps);
      break;
    }
    case Algorithm::kMotifEfficient:
      table = MotifEfficientSchedule(config.motif, config.p, config.eps, config.c_const);
      break;
    case Algorithm::kMotifInduced:
    case Algorithm::kTriangle:
      return t;
    case Algorithm::kGraphParameter:
      if (config.terms.n != n) return absl::InvalidArgumentError("terms and graph sizes differ");
      return t;
  }
  if (!table.ok()) return table.status();
  t.table = *std::move(table);
  t.table.per_level_thresholds = config.per_level_thresholds;
  if (config.s_star) {
    if (absl::Status st = OverrideSampleSize(t.table, *config.s_star); !st.ok()) return st;
  }
  if (config.delta) {
    if (absl::Status st = OverrideJumbledDelta(t.table, *config.delta); !st.ok()) return st;
  }
  if (UsesTable(config.alg)) {
    if (absl::StatusOr<int64_t> s = SampleSize(t.table); !s.ok()) return s.status();
  }
  return t;
}

absl::StatusOr<Verdict> RunTester(const PreparedTester& tester, QueryOracle& oracle, Rng& rng) {
  if (oracle.n() != tester.n) return absl::InvalidArgumentError("tester prepared for another n");
  const TesterConfig& c = tester.config;
  EfficientOverrides overrides{c.s_star, c.delta, c.inner_eps, c.c_const};
  switch (c.alg) {
    case Algorithm::kClique: return CliqueQuality(oracle, tester.table, rng);
    case Algorithm::kCliqueEfficient: return CliqueQualityEfficient(oracle, tester.table, rng);
    case Algorithm::kMotif: return MotifQuality(oracle, *tester.dist, tester.table, rng);
    case Algorithm::kMotifEfficient:
      return NoninducedMotifQualityEfficient(oracle, c.motif, tester.table, rng);
    case Algorithm::kMotifInduced:
      return InducedMotifQualityEfficient(oracle, c.motif, c.p, c.eps, overrides, rng);
    case Algorithm::kTriangle: return TriangleQuality(oracle, c.p, c.eps, rng, c.triangle);
    case Algorithm::kGraphParameter:
      return GraphParameterQuality(oracle, c.terms, c.p, c.eps, overrides, rng);
  }
  return absl::InternalError("unhandled algorithm");
}

absl::Status ValidateExperiment(const ExperimentSpec& spec) {
  if (spec.trials < 1) return absl::InvalidArgumentError("trials must be at least 1");
  for (size_t i = 1; i < spec.budgets.size(); ++i) {
    if (spec.budgets[i] <= spec.budgets[i - 1]) {
      return absl::InvalidArgumentError("budgets must be strictly increasing");
    }
  }
  if (!spec.budgets.empty() && spec.budgets.front() < 0) {
    return absl::InvalidArgumentError("budgets must be nonnegative");
  }
  return absl::OkStatus();
}

Interval RateInterval(int64_t successes, int64_t trials) {
  if (trials <= 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double nt = static_cast<double>(trials);
  const double r = successes / nt;
  if (trials < 20) {
    const double denom = 1.0 + z * z / nt;
    const double center = (r + z * z / (2.0 * nt)) / denom;
    const double half = z * std::sqrt(r * (1.0 - r) / nt + z * z / (4.0 * nt * nt)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
  }
  const double half = z * std::sqrt(r * (1.0 - r) / nt);
  return {std::max(0.0, r - half), std::min(1.0, r + half)};
}

uint64_t TrialGraphSeed(uint64_t seed, int model_index, int trial) {
  return DeriveSeed(seed, {static_cast<uint64_t>(model_index), static_cast<uint64_t>(trial)});
}

uint64_t TrialTesterSeed(uint64_t seed, int model_index, int trial) {
  return DeriveSeed(seed,
                    {static_cast<uint64_t>(model_index), static_cast<uint64_t>(trial), 1});
}

absl::StatusOr<std::vector<ModelRate>> RateExperiment(const ExperimentSpec& spec, Exec exec) {
  if (absl::Status st = ValidateExperiment(spec); !st.ok()) return st;
  std::vector<ModelRate> out;
  std::vector<const ModelVariant*> models{&spec.yes};
  for (const ModelVariant& m : spec.no) models.push_back(&m);
  for (size_t i = 0; i < models.size(); ++i) {
    absl::StatusOr<ModelRate> r =
        RunModel(spec, spec.tester, static_cast<int>(i), *models[i], {}, exec);
    if (!r.ok()) return r.status();
    out.push_back(*std::move(r));
  }
  return out;
}

int64_t SampleSizeForBudget(int64_t q) {
  if (q < 1) return 1;
  int64_t s = static_cast<int64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(q))) / 2.0);
  while (s * (s - 1) / 2 > q) --s;
  while ((s + 1) * s / 2 <= q) ++s;
  return s;
}

absl::StatusOr<std::vector<SweepRow>> BudgetSweep(const ExperimentSpec& spec, Exec exec) {
  if (absl::Status st = ValidateExperiment(spec); !st.ok()) return st;
  if (spec.no.empty()) return absl::InvalidArgumentError("sweep needs a NO model");
  const ModelVariant& no = spec.no.front();
  const int ell = PlantedSize(no);
  const int n = ModelVertexCount(no);
  if (ell <= 0) return absl::InvalidArgumentError("NO model must carry a planted size");
  if (ell >= n) return absl::InvalidArgumentError("planted size must be below n");
  std::vector<SweepRow> rows;
  for (int64_t q : spec.budgets) {
    TesterConfig config = spec.tester;
    if (FitsSampleToBudget(config.alg)) {
      config.mode = ScaleMode::kCalibrated;
      config.s_star = SampleSizeForBudget(q);
    }
    QueryBudget budget;
    budget.total = q;
    absl::StatusOr<ModelRate> yes = RunModel(spec, config, 0, spec.yes, budget, exec);
    if (!yes.ok()) return yes.status();
    absl::StatusOr<ModelRate> nr = RunModel(spec, config, 1, no, budget, exec);
    if (!nr.ok()) return nr.status();
    SweepRow row;
    row.budget = q;
    row.yes_rate = yes->rate;
    row.no_rate = nr->rate;
    row.gap = row.yes_rate - row.no_rate;
    row.bound = 2.0 * static_cast<double>(q) * ell / (n - ell);
    row.yes_se = yes->standard_error;
    row.no_se = nr->standard_error;
    rows.push_back(row);
  }
  return rows;
}

std::string SweepCsv(const std::vector<SweepRow>& rows, const std::string& config) {
  std::string out = "# " + config + "\n";
  out += "budget,yes_rate,no_rate,gap,bound,yes_se,no_se\n";
  char buf[256];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%lld,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g\n",
                  static_cast<long long>(r.budget), r.yes_rate, r.no_rate, r.gap, r.bound,
                  r.yes_se, r.no_se);
    out += buf;
  }
  return out;
}

absl::StatusOr<AvgCaseResult> AvgCaseCount(QueryOracle& oracle, const Motif& h, double p,
                                           const ParamTable& table, Rng& rng) {
  const int n = oracle.n();
  const QueryCounts start = oracle.counts();
  absl::StatusOr<DistributionTable> dist = GnpTable(h, n, p);
  if (!dist.ok()) return dist.status();
  absl::StatusOr<Verdict> v = MotifQuality(oracle, *dist, table, rng);
  if (!v.ok()) return v.status();
  AvgCaseResult out;
  out.verdict = *std::move(v);
  if (out.verdict.accepted()) {
    out.path = CountPath::kQc;
    out.estimate = ExpectedCountGnp(h, n, p);
  } else {
    out.path = CountPath::kExact;
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    absl::StatusOr<SampledSubgraph> sub = oracle.InducedOn(all);
    if (!sub.ok()) return sub.status();
    absl::StatusOr<uint64_t> c = CountLabeledInduced(sub->graph, h);
    if (!c.ok()) return c.status();
    out.estimate = static_cast<double>(*c);
  }
  const QueryCounts now = oracle.counts();
  out.queries = {now.matrix - start.matrix, now.list - start.list, now.degree - start.degree};
  return out;
}

absl::StatusOr<double> MotifRatio(const Graph& g, const Motif& h, double p) {
  absl::StatusOr<uint64_t> c = CountLabeledInduced(g, h);
  if (!c.ok()) return c.status();
  const double mu = ExpectedCountGnp(h, g.n(), p);
  if (!(mu > 0.0)) return absl::InvalidArgumentError("expected count is zero");
  return static_cast<double>(*c) / mu;
}

}  // namespace motifqc

// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/testers.h"

#include <chrono>
#include <cmath>
#include <map>

#include "absl/status/status.h"
#include "motifqc/certify.h"
#include "motifqc/counting.h"
#include "motifqc/models.h"

namespace motifqc {
namespace {

QueryCounts Since(const QueryCounts& now, const QueryCounts& start) {
  return {now.matrix - start.matrix, now.list - start.list, now.degree - start.degree};
}

std::string CountStage(int ell) { return "count check ℓ=" + std::to_string(ell); }

// Appends a relative check and returns whether it passed.
bool RelativeCheck(Verdict& v, const std::string& subject, int ell, double observed,
                   double expected, double tol, const std::string& stage) {
  Check c;
  c.subject = subject;
  c.level = ell;
  c.observed = observed;
  c.low = (1.0 - tol) * expected;
  c.high = (1.0 + tol) * expected;
  c.passed = observed > c.low && observed < c.high;
  v.checks.push_back(c);
  if (!c.passed) {
    v.decision = Decision::kReject;
    v.stage = stage;
    v.failing = c;
  }
  return c.passed;
}

class RunScope {
 public:
  explicit RunScope(QueryOracle& oracle)
      : oracle_(oracle), start_(oracle.counts()),
        clock_(std::chrono::steady_clock::now()) {}

  Verdict Finish(Verdict v) const {
    v.queries = Since(oracle_.counts(), start_);
    v.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_).count();
    if (v.decision == Decision::kAccept && v.stage.empty()) v.stage = "all checks passed";
    return v;
  }

 private:
  QueryOracle& oracle_;
  QueryCounts start_;
  std::chrono::steady_clock::time_point clock_;
};

// Jumbledness of the sampled subgraph on its d distinct vertices.
bool JumbledStep(Verdict& v, const Graph& sub, double p, double delta) {
  const JumbledReport rep = JumblednessDegCodeg(sub, p, delta, Exec::kSerial);
  if (rep.passed) return true;
  const JumbledOffender& w = *rep.worst;
  Check c;
  c.subject = w.kind;
  c.observed = w.value;
  c.low = w.low;
  c.high = w.high;
  c.passed = false;
  v.checks.push_back(c);
  v.decision = Decision::kReject;
  v.stage = "jumbledness " + w.kind;
  v.failing = c;
  return false;
}

absl::Status CheckTableN(const QueryOracle& oracle, int64_t table_n) {
  if (oracle.n() != table_n) {
    return absl::InvalidArgumentError("distribution table was built for n=" +
                                      std::to_string(table_n) + " but the graph has n=" +
                                      std::to_string(oracle.n()));
  }
  return absl::OkStatus();
}

}  // namespace

VertexMultiset DrawMultiset(Rng& rng, int n, int64_t s) {
  VertexMultiset out(s);
  for (auto& v : out) v = static_cast<Vertex>(rng.Below(static_cast<uint64_t>(n)));
  return out;
}

absl::StatusOr<Verdict> CliqueQualityOnMultiset(QueryOracle& oracle,
                                                const ParamTable& table,
                                                const VertexMultiset& s) {
  if (table.k > kDefaultMotifCap) return absl::OutOfRangeError("k exceeds the motif cap");
  RunScope scope(oracle);
  absl::StatusOr<SampledSubgraph> sub = oracle.InducedOn(s);
  if (!sub.ok()) return sub.status();
  Verdict v;
  const int64_t s_len = static_cast<int64_t>(s.size());
  for (int ell = 2; ell <= table.k; ++ell) {
    const double observed = static_cast<double>(
        WeightedCliqueCount(sub->graph, sub->multiplicity, ell, Exec::kSerial));
    const double expected = ESEll(s_len, ell, oracle.n(), table.p);
    if (!RelativeCheck(v, Motif::Complete(ell).ToString(), ell, observed, expected,
                       LevelTolerance(table, ell), CountStage(ell))) {
      break;
    }
  }
  return scope.Finish(v);
}

absl::StatusOr<Verdict> CliqueQuality(QueryOracle& oracle, const ParamTable& table,
                                      Rng& rng) {
  absl::StatusOr<int64_t> s = SampleSize(table);
  if (!s.ok()) return s.status();
  return CliqueQualityOnMultiset(oracle, table, DrawMultiset(rng, oracle.n(), *s));
}

absl::StatusOr<Verdict> CliqueQualityEfficient(QueryOracle& oracle,
                                               const ParamTable& table, Rng& rng) {
  if (table.k > kDefaultMotifCap) return absl::OutOfRangeError("k exceeds the motif cap");
  absl::StatusOr<int64_t> s = SampleSize(table);
  if (!s.ok()) return s.status();
  RunScope scope(oracle);
  const VertexMultiset ms = DrawMultiset(rng, oracle.n(), *s);
  absl::StatusOr<SampledSubgraph> sub = oracle.InducedOn(ms);
  if (!sub.ok()) return sub.status();
  Verdict v;
  if (!JumbledStep(v, sub->graph, table.p, table.delta_jumbled)) return scope.Finish(v);
  for (int ell = 2; ell <= table.k; ++ell) {
    const double observed = static_cast<double>(
        WeightedCliqueCount(sub->graph, sub->multiplicity, ell, Exec::kSerial));
    const double expected = ESEll(*s, ell, oracle.n(), table.p);
    if (!RelativeCheck(v, Motif::Complete(ell).ToString(), ell, observed, expected,
                       LevelTolerance(table, ell), CountStage(ell))) {
      break;
    }
  }
  return scope.Finish(v);
}

absl::StatusOr<Verdict> MotifQualityOnMultiset(QueryOracle& oracle,
                                               const DistributionTable& dist,
                                               const ParamTable& table,
                                               const VertexMultiset& s) {
  const Motif& h = dist.motif;
  if (h.k() > kDefaultMotifCap) return absl::OutOfRangeError("motif exceeds the cap");
  if (absl::Status st = CheckTableN(oracle, dist.n); !st.ok()) return st;
  RunScope scope(oracle);
  absl::StatusOr<SampledSubgraph> sub = oracle.InducedOn(s);
  if (!sub.ok()) return sub.status();
  Verdict v;
  const int64_t s_len = static_cast<int64_t>(s.size());
  std::map<Motif, double> cache;
  for (int ell = 2; ell <= h.k(); ++ell) {
    for (uint32_t m : LabelSubsets(h.k(), ell)) {
      const Motif sub_motif = h.InducedOn(m);
      auto it = cache.find(sub_motif);
      if (it == cache.end()) {
        const double c = static_cast<double>(WeightedMotifCount(
            sub->graph, sub->multiplicity, sub_motif, /*induced=*/true, Exec::kSerial));
        it = cache.emplace(sub_motif, c).first;
      }
      if (!RelativeCheck(v, sub_motif.ToString(), ell, it->second,
                         dist.SampleExpectation(m, s_len), LevelTolerance(table, ell),
                         CountStage(ell))) {
        return scope.Finish(v);
      }
    }
  }
  return scope.Finish(v);
}

absl::StatusOr<Verdict> MotifQuality(QueryOracle& oracle, const DistributionTable& dist,
                                     const ParamTable& table, Rng& rng) {
  absl::StatusOr<int64_t> s = SampleSize(table);
  if (!s.ok()) return s.status();
  return MotifQualityOnMultiset(oracle, dist, table, DrawMultiset(rng, oracle.n(), *s));
}

absl::StatusOr<Verdict> NoninducedMotifQualityEfficient(QueryOracle& oracle,
                                                        const Motif& h,
                                                        const ParamTable& table,
                                                        Rng& rng) {
  if (h.k() > kDefaultMotifCap) return absl::OutOfRangeError("motif exceeds the cap");
  absl::StatusOr<int64_t> s = SampleSize(table);
  if (!s.ok()) return s.status();
  RunScope scope(oracle);
  const VertexMultiset ms = DrawMultiset(rng, oracle.n(), *s);
  absl::StatusOr<SampledSubgraph> sub = oracle.InducedOn(ms);
  if (!sub.ok()) return sub.status();
  Verdict v;
  if (!JumbledStep(v, sub->graph, table.p, table.delta_jumbled)) return scope.Finish(v);
  std::map<Motif, double> cache;
  for (int ell = 2; ell <= h.k(); ++ell) {
    for (uint32_t m : LabelSubsets(h.k(), ell)) {
      const Motif sub_motif = h.InducedOn(m);
      auto it = cache.find(sub_motif);
      if (it == cache.end()) {
        const double c = static_cast<double>(WeightedMotifCount(
            sub->graph, sub->multiplicity, sub_motif, /*induced=*/false, Exec::kSerial));
        it = cache.emplace(sub_motif, c).first;
      }
      const double expected = ExpectedCountGnp(sub_motif, oracle.n(), table.p, false) *
                              ASEll(*s, ell, oracle.n());
      if (!RelativeCheck(v, sub_motif.ToString(), ell, it->second, expected,
                         LevelTolerance(table, ell), CountStage(ell))) {
        return scope.Finish(v);
      }
    }
  }
  return scope.Finish(v);
}

double InducedInnerTolerance(int k, double eps) {
  return eps / std::pow(2.0, k * (k - 1));
}

absl::StatusOr<Verdict> InducedMotifQualityEfficient(QueryOracle& oracle, const Motif& h,
                                                     double p, double eps,
                                                     const EfficientOverrides& overrides,
                                                     Rng& rng) {
  if (h.k() > kDefaultMotifCap) return absl::OutOfRangeError("motif exceeds the cap");
  RunScope scope(oracle);
  Verdict v;
  const double inner_eps = overrides.inner_eps.value_or(InducedInnerTolerance(h.k(), eps));
  for (const auto& group : SupergraphsSameVertices(h)) {
    for (const Motif& sup : group) {
      absl::StatusOr<ParamTable> table =
          MotifEfficientSchedule(sup, p, inner_eps, overrides.c_const);
      if (!table.ok()) return table.status();
      if (overrides.s_star) {
        if (absl::Status st = OverrideSampleSize(*table, *overrides.s_star); !st.ok()) {
          return st;
        }
      }
      if (overrides.delta) {
        if (absl::Status st = OverrideJumbledDelta(*table, *overrides.delta); !st.ok()) {
          return st;
        }
      }
      absl::StatusOr<Verdict> inner = NoninducedMotifQualityEfficient(oracle, sup, *table, rng);
      if (!inner.ok()) return inner.status();
      for (Check c : inner->checks) {
        c.subject = sup.ToString() + " / " + c.subject;
        v.checks.push_back(c);
      }
      if (!inner->accepted()) {
        v.decision = Decision::kReject;
        v.stage = "superset " + sup.ToString() + ": " + inner->stage;
        v.failing = v.checks.back();
        return scope.Finish(v);
      }
    }
  }
  return scope.Finish(v);
}

}  // namespace motifqc

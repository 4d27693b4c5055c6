// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/triangle.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "absl/status/status.h"
#include "motifqc/models.h"

namespace motifqc {
namespace {

int64_t OpsSince(const QueryOracle& oracle, const QueryCounts& start) {
  return oracle.counts().Total() - start.Total();
}

Verdict Rejected(std::string stage, Check c) {
  Verdict v;
  v.decision = Decision::kReject;
  v.stage = std::move(stage);
  c.passed = false;
  v.checks.push_back(c);
  v.failing = c;
  return v;
}

}  // namespace

FilterResult ArboricityFilter(QueryOracle& oracle, double alpha) {
  FilterResult r;
  r.statistic = oracle.ReferenceDegeneracy();
  r.low = 0.0;
  r.high = 2.0 * alpha;
  r.accepted = r.statistic <= r.high;
  r.detail = "degeneracy";
  return r;
}

int64_t AvgDegreeStageOneSize(int64_t n, double p) {
  return static_cast<int64_t>(std::ceil(48.0 * std::log(static_cast<double>(n)) / p));
}

int64_t AvgDegreeStageTwoSize(int64_t n, double p) {
  // Bernstein for a mean of values in [0, n-1] with variance at most
  // (n-1) mu, relative error 1/2, failure 1/n, and mu >= np/5.
  const double mu_floor = n * p / 5.0;
  const double size = 28.0 * (n - 1) * std::log(2.0 * n) / (3.0 * mu_floor);
  return std::max<int64_t>(1, static_cast<int64_t>(std::ceil(size)));
}

absl::StatusOr<FilterResult> AvgDegreeFilter(QueryOracle& oracle, double p, Rng& rng) {
  const int n = oracle.n();
  FilterResult r;
  const int64_t m1 = AvgDegreeStageOneSize(n, p);
  double sum = 0.0;
  for (int64_t i = 0; i < m1; ++i) {
    absl::StatusOr<int> d = oracle.Degree(static_cast<Vertex>(rng.Below(n)));
    if (!d.ok()) return d.status();
    sum += *d;
  }
  r.statistic = sum / m1;
  r.low = n * p / 5.0;
  r.high = std::numeric_limits<double>::infinity();
  if (r.statistic < r.low) {
    r.accepted = false;
    r.detail = "stage 1 mean degree";
    return r;
  }
  const int64_t m2 = AvgDegreeStageTwoSize(n, p);
  sum = 0.0;
  for (int64_t i = 0; i < m2; ++i) {
    absl::StatusOr<int> d = oracle.Degree(static_cast<Vertex>(rng.Below(n)));
    if (!d.ok()) return d.status();
    sum += *d;
  }
  r.statistic = sum / m2;
  r.low = n * p / 3.0;
  r.high = 3.0 * n * p;
  r.accepted = r.statistic >= r.low && r.statistic <= r.high;
  r.detail = "stage 2 mean degree";
  return r;
}

int64_t ClosureTarget(double delta, double failure) {
  return std::max<int64_t>(
      2, static_cast<int64_t>(std::ceil(3.0 * std::log(1.0 / failure) / (delta * delta))));
}

absl::StatusOr<TriangleEstimate> EstimateTriangles(QueryOracle& oracle, double t,
                                                   double delta, double alpha_prime,
                                                   bool allow_below_t, Rng& rng,
                                                   const TriangleOptions& options) {
  (void)alpha_prime;  // the reference estimator does not need the degeneracy bound
  if (!(delta > 0.0)) return absl::InvalidArgumentError("delta must be positive");
  const int n = oracle.n();
  const QueryCounts start = oracle.counts();
  TriangleEstimate out;

  // Degree prefix table over a uniform sample R.
  const int64_t m = std::max<int64_t>(
      1, static_cast<int64_t>(std::ceil(options.prefix_factor * std::sqrt(static_cast<double>(n)))));
  std::vector<Vertex> centers(m);
  std::vector<int> degrees(m);
  std::vector<double> prefix(m + 1, 0.0);
  for (int64_t i = 0; i < m; ++i) {
    centers[i] = static_cast<Vertex>(rng.Below(n));
    absl::StatusOr<int> d = oracle.Degree(centers[i]);
    if (!d.ok()) return d.status();
    degrees[i] = *d;
    prefix[i + 1] = prefix[i] + 0.5 * static_cast<double>(*d) * (*d - 1);
  }
  const double wedges_r = prefix[m];
  const double wedges_total = static_cast<double>(n) / m * wedges_r;
  if (wedges_r == 0.0) {
    out.below_t = allow_below_t && t > 0.0;
    return out;
  }

  const int64_t target = ClosureTarget(delta, options.failure);
  // Enough wedges to see `target` closures when the count is t/4.
  int64_t cap = std::numeric_limits<int64_t>::max();
  if (allow_below_t && t > 0.0) {
    const double f_min = std::min(1.0, 3.0 * (t / 4.0) / wedges_total);
    cap = static_cast<int64_t>(std::ceil(4.0 * target / f_min));
  }

  while (out.closures < target && out.wedges < cap) {
    if (OpsSince(oracle, start) + 3 > options.step_limit) {
      out.timed_out = true;
      return out;
    }
    const double x = rng.Uniform() * wedges_r;
    int64_t i = std::upper_bound(prefix.begin() + 1, prefix.end(), x) - prefix.begin() - 1;
    i = std::min(i, m - 1);
    while (degrees[i] < 2) ++i;  // x landed on a zero-width slot boundary
    const int d = degrees[i];
    const int64_t a = static_cast<int64_t>(rng.Below(d)) + 1;
    int64_t b = static_cast<int64_t>(rng.Below(d - 1)) + 1;
    if (b >= a) ++b;
    absl::StatusOr<std::optional<Vertex>> u = oracle.Neighbor(centers[i], a);
    if (!u.ok()) return u.status();
    absl::StatusOr<std::optional<Vertex>> v = oracle.Neighbor(centers[i], b);
    if (!v.ok()) return v.status();
    if (!u->has_value() || !v->has_value()) {
      return absl::InternalError("degree and neighbor answers disagree");
    }
    absl::StatusOr<bool> closed = oracle.Pair(**u, **v);
    if (!closed.ok()) return closed.status();
    ++out.wedges;
    out.closures += *closed;
  }
  if (out.closures >= target) {
    // Inverse binomial sampling: (K-1)/(W-1) is unbiased for the closure rate.
    const double rate = static_cast<double>(target - 1) / static_cast<double>(out.wedges - 1);
    out.estimate = wedges_total * rate / 3.0;
  } else {
    out.estimate = wedges_total * static_cast<double>(out.closures) / out.wedges / 3.0;
    out.below_t = out.estimate < t;
  }
  return out;
}

absl::StatusOr<Verdict> TriangleQuality(QueryOracle& oracle, double p, double eps, Rng& rng,
                                        const TriangleOptions& options) {
  if (!(p > 0.0 && p <= 1.0)) return absl::InvalidArgumentError("p must lie in (0,1]");
  if (!(eps > 0.0 && eps < 1.0)) return absl::InvalidArgumentError("eps must lie in (0,1)");
  const auto clock = std::chrono::steady_clock::now();
  const QueryCounts start = oracle.counts();
  const int n = oracle.n();
  const double nn = static_cast<double>(n);
  const double alpha = 2.0 * nn * p;
  const double alpha_prime = 200.0 * std::pow(std::log(nn), 2) * nn * p;
  const double mu = Binomial(n, 3) * p * p * p;
  const double t = (1.0 - eps) * mu;
  const double delta = eps / 4.0;

  auto finish = [&](Verdict v) {
    const QueryCounts now = oracle.counts();
    v.queries = {now.matrix - start.matrix, now.list - start.list, now.degree - start.degree};
    v.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - clock).count();
    if (p < 1.0 / nn) v.warnings.push_back("p is below 1/n");
    return v;
  };

  auto arboricity = [&]() -> std::optional<Verdict> {
    const FilterResult r = ArboricityFilter(oracle, alpha);
    if (r.accepted) return std::nullopt;
    return Rejected("arboricity filter", {"degeneracy", 0, r.statistic, r.low, r.high});
  };
  auto degree = [&]() -> absl::StatusOr<std::optional<Verdict>> {
    absl::StatusOr<FilterResult> r = AvgDegreeFilter(oracle, p, rng);
    if (!r.ok()) return r.status();
    if (r->accepted) return std::optional<Verdict>();
    return std::optional<Verdict>(
        Rejected("average degree filter", {r->detail, 0, r->statistic, r->low, r->high}));
  };

  if (options.degree_filter_first) {
    absl::StatusOr<std::optional<Verdict>> d = degree();
    if (!d.ok()) return d.status();
    if (*d) return finish(**d);
    if (auto a = arboricity()) return finish(*a);
  } else {
    if (auto a = arboricity()) return finish(*a);
    absl::StatusOr<std::optional<Verdict>> d = degree();
    if (!d.ok()) return d.status();
    if (*d) return finish(**d);
  }

  Verdict v;
  absl::StatusOr<TriangleEstimate> low =
      EstimateTriangles(oracle, t, delta, alpha_prime, /*allow_below_t=*/true, rng, options);
  if (!low.ok()) return low.status();
  if (low->timed_out) return finish(Rejected("timeout", {"triangles", 3, low->estimate, t, mu}));
  if (low->below_t || low->estimate < t) {
    return finish(Rejected("triangle lower bound",
                           {"triangles", 3, low->estimate, t,
                            std::numeric_limits<double>::infinity()}));
  }
  v.checks.push_back({"triangles", 3, low->estimate, t, std::numeric_limits<double>::infinity(), true});

  absl::StatusOr<TriangleEstimate> high =
      EstimateTriangles(oracle, t, delta, alpha_prime, /*allow_below_t=*/false, rng, options);
  if (!high.ok()) return high.status();
  const double upper = (1.0 + eps / 2.0) * mu;
  if (high->timed_out) return finish(Rejected("timeout", {"triangles", 3, high->estimate, 0, upper}));
  if (high->estimate > upper) {
    return finish(Rejected("triangle upper bound", {"triangles", 3, high->estimate, 0.0, upper}));
  }
  v.checks.push_back({"triangles", 3, high->estimate, 0.0, upper, true});
  v.stage = "all checks passed";
  return finish(v);
}

}  // namespace motifqc

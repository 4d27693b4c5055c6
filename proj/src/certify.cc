// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/certify.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "absl/status/status.h"
#include "motifqc/models.h"
#include "motifqc/params.h"
#include "motifqc/rng.h"

namespace motifqc {
namespace {

constexpr double kSlack = 1e-9;

// Distance outside [low, high], zero inside.
double Excess(double value, double low, double high) {
  if (value < low - kSlack) return low - value;
  if (value > high + kSlack) return value - high;
  return 0.0;
}

}  // namespace

std::vector<double> SampleMultisetCounts(const Graph& g, const Motif& h, int64_t s,
                                         int trials, uint64_t seed, bool induced,
                                         Exec exec) {
  std::vector<double> counts(trials, 0.0);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::kParallel)
  for (int t = 0; t < trials; ++t) {
    Rng rng(DeriveSeed(seed, {static_cast<uint64_t>(t)}));
    VertexMultiset ms(s);
    for (auto& v : ms) v = static_cast<Vertex>(rng.Below(g.n()));
    const DistinctVertices dv = Collapse(ms);
    const Graph sub = g.InducedSubgraph(dv.vertices);
    counts[t] = static_cast<double>(
        WeightedMotifCount(sub, dv.multiplicity, h, induced, Exec::kSerial));
  }
  return counts;
}

double DeviationRate(const std::vector<double>& counts, double expected, double tolerance) {
  if (counts.empty()) return 0.0;
  int64_t bad = 0;
  const double low = (1.0 - tolerance) * expected;
  const double high = (1.0 + tolerance) * expected;
  for (double c : counts) {
    if (c < low - kSlack * std::max(1.0, expected) ||
        c > high + kSlack * std::max(1.0, expected)) {
      ++bad;
    }
  }
  return static_cast<double>(bad) / counts.size();
}

absl::StatusOr<ExpQrResult> EmpiricalExpQr(const Graph& g, const QuasirandomnessSpec& spec,
                                           int64_t s, uint64_t seed, Exec exec) {
  if (!(spec.tolerance > 0.0)) return absl::InvalidArgumentError("tolerance must be positive");
  if (!(spec.rate > 0.0)) return absl::InvalidArgumentError("rate must be positive");
  if (spec.trials < 100) return absl::InvalidArgumentError("at least 100 trials are required");
  if (s < spec.min_size) return absl::InvalidArgumentError("s is below the minimum size");
  if (g.n() < 1) return absl::InvalidArgumentError("empty vertex set");
  const int ell = spec.motif.k();
  ExpQrResult r;
  r.expected = FallingFactorial(g.n(), ell) * spec.density * ASEll(s, ell, g.n());
  const auto counts = SampleMultisetCounts(g, spec.motif, s, spec.trials, seed,
                                           spec.induced, exec);
  r.deviation_rate = DeviationRate(counts, r.expected, spec.tolerance);
  r.bound = std::pow(4.0, ell + 1) * std::exp(-spec.rate * static_cast<double>(s));
  r.standard_error = std::sqrt(r.deviation_rate * (1.0 - r.deviation_rate) / spec.trials);
  r.satisfied = r.deviation_rate <= r.bound + 3.0 * r.standard_error;
  return r;
}

double ImpliedJumbledness(int64_t n, double p, double delta) {
  const double nn = static_cast<double>(n);
  return nn * std::sqrt(3.0 * delta) + std::sqrt(nn * (delta + p));
}

JumbledReport JumblednessDegCodeg(const Graph& g, double p, double delta, Exec exec) {
  const int n = g.n();
  JumbledReport report;
  report.implied_beta = ImpliedJumbledness(n, p, delta);

  const double deg_low = (n - 1) * (p - delta), deg_high = (n - 1) * (p + delta);
  double worst = 0.0;
  for (int u = 0; u < n; ++u) {
    const double e = Excess(g.Degree(u), deg_low, deg_high);
    if (e > worst) {
      worst = e;
      report.worst = JumbledOffender{"degree", u, -1, static_cast<double>(g.Degree(u)),
                                     deg_low, deg_high};
    }
  }
  if (report.worst) {
    report.passed = false;
    return report;
  }

  const double co_low = (n - 2) * (p * p - delta), co_high = (n - 2) * (p * p + delta);
  const int words = WordsFor(n);
  // Per-row worst, reduced serially so the offender does not depend on threads.
  std::vector<double> row_excess(n, 0.0);
  std::vector<Vertex> row_partner(n, -1);
  std::vector<int> row_value(n, 0);
#pragma omp parallel for schedule(dynamic, 8) if (exec == Exec::kParallel)
  for (int u = 0; u < n; ++u) {
    const Row& ru = g.AdjacencyRow(u);
    for (int v = u + 1; v < n; ++v) {
      const Row& rv = g.AdjacencyRow(v);
      int common = 0;
      for (int w = 0; w < words; ++w) common += std::popcount(ru[w] & rv[w]);
      const double e = Excess(common, co_low, co_high);
      if (e > row_excess[u]) {
        row_excess[u] = e;
        row_partner[u] = v;
        row_value[u] = common;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    if (row_excess[u] > worst) {
      worst = row_excess[u];
      report.worst = JumbledOffender{"codegree", u, row_partner[u],
                                     static_cast<double>(row_value[u]), co_low, co_high};
    }
  }
  report.passed = !report.worst.has_value();
  return report;
}

absl::StatusOr<double> JumblednessExhaustive(const Graph& g, double p) {
  const int n = g.n();
  if (n > kExhaustiveJumbledMaxN) {
    return absl::OutOfRangeError("exhaustive jumbledness supports n <= " +
                                 std::to_string(kExhaustiveJumbledMaxN));
  }
  const uint32_t full = (uint32_t{1} << n);
  std::vector<uint32_t> nbr(n, 0);
  for (int u = 0; u < n; ++u) {
    for (Vertex v : g.Neighbors(u)) nbr[u] |= uint32_t{1} << v;
  }
  // Edges inside each vertex set.
  std::vector<int> inside(full, 0);
  for (uint32_t z = 1; z < full; ++z) {
    const int low = std::countr_zero(z);
    const uint32_t rest = z & (z - 1);
    inside[z] = inside[rest] + std::popcount(nbr[low] & rest);
  }
  double beta = 0.0;
  std::vector<int> into_x(full, 0);
  for (uint32_t x = 1; x < full; ++x) {
    // into_x[y] = sum over v in y of |N(v) and x|.
    for (uint32_t y = 1; y < full; ++y) {
      const int low = std::countr_zero(y);
      into_x[y] = into_x[y & (y - 1)] + std::popcount(nbr[low] & x);
    }
    const int sx = std::popcount(x);
    for (uint32_t y = 1; y < full; ++y) {
      const int sy = std::popcount(y);
      const double e = into_x[y] - inside[x & y];
      const double dev = std::fabs(e - p * sx * sy) / std::sqrt(static_cast<double>(sx) * sy);
      beta = std::max(beta, dev);
    }
  }
  return beta;
}

}  // namespace motifqc

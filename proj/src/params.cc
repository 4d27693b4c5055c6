// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/params.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "motifqc/counting.h"
#include "motifqc/models.h"

namespace motifqc {
namespace {

absl::Status CheckCommon(int k, double p, double eps) {
  if (k < 1 || k > Motif::kMaxLabels) {
    return absl::OutOfRangeError("k out of range: " + std::to_string(k));
  }
  if (!(eps > 0.0 && eps < 1.0)) return absl::InvalidArgumentError("eps must lie in (0,1)");
  if (!(p > 0.0 && p <= 0.5)) return absl::InvalidArgumentError("p must lie in (0, 1/2]");
  return absl::OkStatus();
}

double Choose2(int x) { return x * (x - 1) / 2.0; }

// ln((6 ell)^ell / (floor * eps)).
double LogTerm(int ell, double floor_density, double eps) {
  return ell * std::log(6.0 * ell) - std::log(floor_density) - std::log(eps);
}

ParamTable Blank(ScheduleKind kind, int k, double p, double eps) {
  ParamTable t;
  t.kind = kind;
  t.k = k;
  t.p = p;
  t.eps = eps;
  t.eps_ell.assign(k + 1, 0.0);
  t.alpha_ell.assign(k + 1, 0.0);
  t.s_ell.assign(k + 1, 0.0);
  return t;
}

}  // namespace

std::string ScheduleName(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::kBasic:
      return "basic";
    case ScheduleKind::kEfficient:
      return "efficient";
    case ScheduleKind::kGeneral:
      return "general";
    case ScheduleKind::kMotifEfficient:
      return "motif_efficient";
  }
  return "";
}

std::string ScaleName(ScaleMode mode) {
  return mode == ScaleMode::kPaper ? "paper" : "calibrated";
}

absl::Status OverrideSampleSize(ParamTable& table, int64_t s_star) {
  if (s_star < 1) return absl::InvalidArgumentError("s_star must be positive");
  table.s_star = static_cast<double>(s_star);
  table.mode = ScaleMode::kCalibrated;
  return absl::OkStatus();
}

absl::Status OverrideJumbledDelta(ParamTable& table, double delta) {
  if (!(delta >= 0.0)) return absl::InvalidArgumentError("delta must be nonnegative");
  table.delta_jumbled = delta;
  table.mode = ScaleMode::kCalibrated;
  return absl::OkStatus();
}

absl::StatusOr<int64_t> SampleSize(const ParamTable& table) {
  if (!(table.s_star >= 1.0) || table.s_star > kMaxSampleSize) {
    return absl::OutOfRangeError("sample size " + std::to_string(table.s_star) +
                                 " is not drawable; override s_star in calibrated mode");
  }
  return static_cast<int64_t>(table.s_star);
}

double LevelTolerance(const ParamTable& table, int ell) {
  const bool efficient = table.kind == ScheduleKind::kEfficient ||
                         table.kind == ScheduleKind::kMotifEfficient;
  if (table.per_level_thresholds && ell >= 2) return table.eps_ell[ell - 1];
  return efficient ? 5.0 * table.eps / 8.0 : table.eps / 2.0;
}

double ASEll(int64_t s, int ell, int64_t n) {
  if (ell > s) return 0.0;
  double a = 1.0;
  for (int i = 0; i < ell; ++i) a *= static_cast<double>(s - i) / static_cast<double>(n);
  return a;
}

double ESEll(int64_t s, int ell, int64_t n, double p) {
  double ratio = 1.0;  // C(n, ell) ell! / n^ell
  for (int i = 0; i < ell; ++i) ratio *= static_cast<double>(n - i) / static_cast<double>(n);
  double fall_s = 1.0;
  for (int i = 0; i < ell; ++i) fall_s *= static_cast<double>(s - i);
  if (ell > s) return 0.0;
  return ratio * fall_s * std::pow(p, Choose2(ell));
}

absl::StatusOr<ParamTable> CliqueSchedule(int k, double p, double eps) {
  if (absl::Status st = CheckCommon(k, p, eps); !st.ok()) return st;
  ParamTable t = Blank(ScheduleKind::kBasic, k, p, eps);
  for (int ell = 1; ell <= k; ++ell) t.eps_ell[ell] = eps * std::pow(2.0 / 3.0, k - ell - 1);
  t.alpha_ell[1] = std::numeric_limits<double>::infinity();
  if (k >= 2) t.alpha_ell[2] = eps * eps * p * p * std::pow(2.0 / 3.0, 2 * (k - 3)) / 128.0;
  for (int ell = 3; ell <= k; ++ell) {
    t.alpha_ell[ell] = std::pow(p, 2 * ell - 2) * t.eps_ell[ell - 1] * t.eps_ell[ell - 1] /
                       (4096.0 * ell * ell);
  }
  for (int ell = 1; ell <= k; ++ell) {
    const double lead = ell * ell * 8192.0 / (std::pow(p, 2 * ell - 2) * eps * eps);
    t.s_ell[ell] = std::ceil(lead * std::pow(1.5, 2 * (k - ell)) *
                             LogTerm(ell, std::pow(p, Choose2(ell + 2)), eps));
  }
  t.s_star = t.s_ell[k];
  return t;
}

absl::StatusOr<ParamTable> EfficientSchedule(int k, double p, double eps, double c_const) {
  if (absl::Status st = CheckCommon(k, p, eps); !st.ok()) return st;
  if (!(c_const > 0.0)) return absl::InvalidArgumentError("C must be positive");
  ParamTable t = Blank(ScheduleKind::kEfficient, k, p, eps);
  t.c_const = c_const;
  for (int ell = 1; ell <= k; ++ell) t.eps_ell[ell] = eps * std::pow(4.0 / 7.0, k - ell - 1);
  t.alpha_ell[1] = std::numeric_limits<double>::infinity();
  if (k >= 2) t.alpha_ell[2] = eps * eps * std::pow(4.0 / 7.0, 2 * (k - 3)) / 128.0;
  for (int ell = 3; ell <= k; ++ell) {
    t.alpha_ell[ell] = std::pow(p, 2 * ell - 2) * t.eps_ell[ell - 1] * t.eps_ell[ell - 1] / 4096.0;
  }
  for (int ell = 1; ell <= k; ++ell) {
    const double lead = 1200.0 * c_const * c_const * ell * ell * 8192.0 /
                        (std::pow(p, 5 * ell) * eps * eps);
    t.s_ell[ell] = std::ceil(lead * std::pow(1.75, 2 * (k - ell)) *
                             LogTerm(ell, std::pow(p, Choose2(ell + 2)), eps));
  }
  t.s_star = t.s_ell[k];
  t.delta_jumbled = std::pow(p, 2 * k) / (12.0 * c_const * c_const);
  return t;
}

double DistributionTable::Expectation(uint32_t label_mask) const {
  return FallingFactorial(n, std::popcount(label_mask)) * density[label_mask];
}

double DistributionTable::SampleExpectation(uint32_t label_mask, int64_t s) const {
  return Expectation(label_mask) * ASEll(s, std::popcount(label_mask), n);
}

namespace {

absl::Status FillREll(DistributionTable& t) {
  t.r_ell.assign(t.motif.k() + 1, 0.0);
  for (int ell = 1; ell <= t.motif.k(); ++ell) {
    absl::StatusOr<double> r = REll(t, ell);
    if (!r.ok()) return r.status();
    t.r_ell[ell] = *r;
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<DistributionTable> GnpTable(const Motif& h, int64_t n, double p) {
  if (!(p > 0.0 && p <= 0.5)) return absl::InvalidArgumentError("p must lie in (0, 1/2]");
  DistributionTable t;
  t.motif = h;
  t.n = n;
  t.source = DensitySource::kGnp;
  t.density.assign(size_t{1} << h.k(), 1.0);
  for (uint32_t m = 1; m < (uint32_t{1} << h.k()); ++m) {
    const Motif sub = h.InducedOn(m);
    const int e = sub.NumEdges();
    t.density[m] = std::pow(p, e) * std::pow(1.0 - p, Motif::NumPairs(sub.k()) - e);
  }
  if (absl::Status st = FillREll(t); !st.ok()) return st;
  return t;
}

absl::StatusOr<DistributionTable> SbmTable(const Motif& h, const std::vector<int>& sizes,
                                           const std::vector<std::vector<double>>& probs) {
  DistributionTable t;
  t.motif = h;
  t.source = DensitySource::kSbm;
  for (int s : sizes) t.n += s;
  t.density.assign(size_t{1} << h.k(), 1.0);
  for (uint32_t m = 1; m < (uint32_t{1} << h.k()); ++m) {
    const Motif sub = h.InducedOn(m);
    absl::StatusOr<double> e = ExpectedCountSbm(sub, sizes, probs);
    if (!e.ok()) return e.status();
    const double denom = FallingFactorial(t.n, sub.k());
    t.density[m] = denom > 0.0 ? *e / denom : 0.0;
  }
  if (absl::Status st = FillREll(t); !st.ok()) return st;
  return t;
}

absl::StatusOr<DistributionTable> UserTable(const Motif& h, int64_t n,
                                            const std::map<uint32_t, double>& densities) {
  DistributionTable t;
  t.motif = h;
  t.n = n;
  t.source = DensitySource::kUser;
  t.density.assign(size_t{1} << h.k(), 1.0);
  for (uint32_t m = 1; m < (uint32_t{1} << h.k()); ++m) {
    auto it = densities.find(m);
    if (it == densities.end()) {
      return absl::InvalidArgumentError("missing density for label mask " + std::to_string(m));
    }
    if (!(it->second >= 0.0 && it->second <= 1.0)) {
      return absl::InvalidArgumentError("densities must lie in [0,1]");
    }
    t.density[m] = it->second;
  }
  if (absl::Status st = FillREll(t); !st.ok()) return st;
  return t;
}

absl::StatusOr<double> REll(const DistributionTable& table, int ell) {
  const int k = table.motif.k();
  if (ell < 1 || ell > k) return absl::InvalidArgumentError("ell must lie in [1, k]");
  double best = std::numeric_limits<double>::infinity();
  for (uint32_t m : LabelSubsets(k, ell)) {
    double denom = 0.0;
    for (uint32_t rest = m; rest; rest &= rest - 1) {
      const uint32_t sub = m & ~(rest & (~rest + 1));
      denom = std::max(denom, table.density[sub]);
    }
    if (denom == 0.0) {
      return absl::InvalidArgumentError("zero density in the density increment denominator");
    }
    const double f = table.density[m];
    best = std::min(best, f * f / (denom * denom));
  }
  return best;
}

double REllGnpClosedForm(const Motif& h, int ell, double p) {
  double best = std::numeric_limits<double>::infinity();
  for (uint32_t m : LabelSubsets(h.k(), ell)) {
    best = std::min(best, std::pow(p / (1.0 - p), 2 * h.InducedOn(m).MaxDegree()));
  }
  return std::pow(1.0 - p, 2 * ell - 2) * best;
}

absl::StatusOr<ParamTable> GeneralSchedule(const DistributionTable& table, double eps) {
  const int k = table.motif.k();
  if (!(eps > 0.0 && eps < 1.0)) return absl::InvalidArgumentError("eps must lie in (0,1)");
  const uint32_t full = (uint32_t{1} << k) - 1;
  const double f_h = table.density[full];
  if (!(f_h > 0.0)) return absl::InvalidArgumentError("F_D(H) = 0 makes the schedule diverge");
  ParamTable t = Blank(ScheduleKind::kGeneral, k, 0.0, eps);
  t.r_ell = table.r_ell;
  for (int ell = 1; ell <= k; ++ell) t.eps_ell[ell] = eps * std::pow(2.0 / 3.0, k - ell - 1);
  t.alpha_ell[1] = std::numeric_limits<double>::infinity();
  if (k >= 2) t.alpha_ell[2] = eps * eps * t.r_ell[2] * std::pow(2.0 / 3.0, 2 * (k - 3)) / 128.0;
  for (int ell = 3; ell <= k; ++ell) {
    t.alpha_ell[ell] = t.r_ell[ell] * t.eps_ell[ell - 1] * t.eps_ell[ell - 1] /
                       (4096.0 * std::pow(ell, 4));
  }
  for (int ell = 1; ell <= k; ++ell) {
    if (!(t.r_ell[ell] > 0.0)) {
      return absl::InvalidArgumentError("r_ell = 0 makes the schedule diverge");
    }
    t.s_ell[ell] = std::ceil(std::pow(ell, 4) * 4096.0 / (t.r_ell[ell] * eps * eps) *
                             std::pow(1.5, 2 * (k - ell)) * 8.0 * LogTerm(ell, f_h, eps));
    if (ell >= 2 && t.r_ell[ell] > (4.0 / 9.0) * t.r_ell[ell - 1] * (1 + 1e-12)) {
      t.warnings.push_back("r_" + std::to_string(ell) + " exceeds (4/9) r_" +
                           std::to_string(ell - 1));
    }
  }
  t.s_star = t.s_ell[k];
  return t;
}

absl::StatusOr<ParamTable> MotifEfficientSchedule(const Motif& h, double p, double eps,
                                                  double c_const) {
  const int k = h.k();
  if (absl::Status st = CheckCommon(k, p, eps); !st.ok()) return st;
  if (!(c_const > 0.0)) return absl::InvalidArgumentError("C must be positive");
  ParamTable t = Blank(ScheduleKind::kMotifEfficient, k, p, eps);
  t.c_const = c_const;
  t.r_ell.assign(k + 1, 0.0);
  // Noninduced densities p^e(H').
  for (int ell = 1; ell <= k; ++ell) {
    double best = std::numeric_limits<double>::infinity();
    for (uint32_t m : LabelSubsets(k, ell)) {
      best = std::min(best, std::pow(p, 2 * h.InducedOn(m).MaxDegree()));
    }
    t.r_ell[ell] = best;
  }
  for (int ell = 1; ell <= k; ++ell) t.eps_ell[ell] = eps * std::pow(4.0 / 7.0, k - ell - 1);
  t.alpha_ell[1] = std::numeric_limits<double>::infinity();
  if (k >= 2) t.alpha_ell[2] = eps * eps * t.r_ell[2] * std::pow(4.0 / 7.0, 2 * (k - 3)) / 128.0;
  for (int ell = 3; ell <= k; ++ell) {
    t.alpha_ell[ell] = t.r_ell[ell] * t.eps_ell[ell - 1] * t.eps_ell[ell - 1] /
                       (1024.0 * ell * ell);
  }
  const double sigma = ComputeMotifStats(h).sigma;
  const int j = static_cast<int>(std::ceil(sigma));
  t.s_star = std::ceil(1200.0 * c_const * c_const * k * k * 1024.0 /
                       (std::pow(p, 5.0 * sigma) * eps * eps) * 8.0 *
                       LogTerm(k, std::pow(p, Choose2(k + 2)), eps));
  for (int ell = 1; ell <= k; ++ell) t.s_ell[ell] = t.s_star;
  t.delta_jumbled = std::pow(p, 2 * j) / (12.0 * c_const * c_const);
  return t;
}

McDiarmidResult McDiarmidBound(double q, double delta, absl::Span<const double> c,
                               double f_max, double f_mean) {
  McDiarmidResult r;
  const double limit = std::min({f_max > 0.0 ? delta / (2.0 * f_max)
                                             : std::numeric_limits<double>::infinity(),
                                 f_mean > 0.0 ? delta / (4.0 * f_mean)
                                              : std::numeric_limits<double>::infinity(),
                                 0.5});
  if (q < 0.0 || q > limit) {
    r.violation = "q=" + std::to_string(q) + " exceeds min{delta/(2 max f), delta/(4 E f), 1/2}=" +
                  std::to_string(limit);
    return r;
  }
  double sum = 0.0, sum_sq = 0.0;
  for (double ci : c) {
    sum += ci;
    sum_sq += ci * ci;
  }
  const double slack = std::max(0.0, delta / 2.0 - q * sum);
  const double tail = sum_sq > 0.0 ? 2.0 * std::exp(-2.0 * slack * slack / sum_sq)
                                   : (slack > 0.0 ? 0.0 : 2.0);
  r.precondition_ok = true;
  r.bound = std::min(1.0, 2.0 * q + tail);
  return r;
}

}  // namespace motifqc

// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MOTIFQC_PARAMS_H_
#define MOTIFQC_PARAMS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "motifqc/graph.h"

namespace motifqc {

enum class ScheduleKind { kBasic, kEfficient, kGeneral, kMotifEfficient };
enum class ScaleMode { kPaper, kCalibrated };

std::string ScheduleName(ScheduleKind kind);
std::string ScaleName(ScaleMode mode);

// Largest multiset a tester will draw.
inline constexpr double kMaxSampleSize = 1e7;

// Schedule quantities. Per-level vectors are indexed by ell and have size
// k + 1; entry 0 is unused. For kEfficient and kMotifEfficient, eps_ell holds
// zeta and alpha_ell holds eta.
struct ParamTable {
  ScheduleKind kind = ScheduleKind::kBasic;
  ScaleMode mode = ScaleMode::kPaper;
  int k = 0;
  double p = 0.0;
  double eps = 0.0;
  std::vector<double> eps_ell;
  std::vector<double> alpha_ell;
  std::vector<double> s_ell;
  std::vector<double> r_ell;
  double s_star = 0.0;
  double c_const = 1.0;
  double delta_jumbled = 0.0;
  // Compare each level against eps_{ell-1} instead of the flat eps/2.
  bool per_level_thresholds = false;
  std::vector<std::string> warnings;
};

// Switches to calibrated mode with an explicit sample size.
absl::Status OverrideSampleSize(ParamTable& table, int64_t s_star);
absl::Status OverrideJumbledDelta(ParamTable& table, double delta);
// s_star as an integer, or an error when it is beyond kMaxSampleSize.
absl::StatusOr<int64_t> SampleSize(const ParamTable& table);

// Relative half-width used at level ell by the clique and motif testers.
double LevelTolerance(const ParamTable& table, int ell);

// C(s, ell) ell! / n^ell, zero when ell > s.
double ASEll(int64_t s, int ell, int64_t n);
// C(n, ell) ell! p^C(ell,2) A(s, ell, n).
double ESEll(int64_t s, int ell, int64_t n, double p);

absl::StatusOr<ParamTable> CliqueSchedule(int k, double p, double eps);
absl::StatusOr<ParamTable> EfficientSchedule(int k, double p, double eps,
                                             double c_const = 1.0);

enum class DensitySource { kGnp, kSbm, kUser };

// Densities of every induced sub-motif of a motif, keyed by label mask.
struct DistributionTable {
  Motif motif;
  int64_t n = 0;
  DensitySource source = DensitySource::kGnp;
  std::vector<double> density;  // size 2^k, density[0] = 1
  std::vector<double> r_ell;    // size k + 1

  double Density(uint32_t label_mask) const { return density[label_mask]; }
  // E_D(H') = C(n, ell) ell! F_D(H').
  double Expectation(uint32_t label_mask) const;
  // S_D(H', s) = E_D(H') A(s, ell, n).
  double SampleExpectation(uint32_t label_mask, int64_t s) const;
};

absl::StatusOr<DistributionTable> GnpTable(const Motif& h, int64_t n, double p);
absl::StatusOr<DistributionTable> SbmTable(const Motif& h,
                                           const std::vector<int>& sizes,
                                           const std::vector<std::vector<double>>& probs);
// Densities for every nonempty label mask must be supplied.
absl::StatusOr<DistributionTable> UserTable(const Motif& h, int64_t n,
                                            const std::map<uint32_t, double>& densities);

// Definitional density increment over the label subsets of size ell.
absl::StatusOr<double> REll(const DistributionTable& table, int ell);
// Closed form under G(n, p), p <= 1/2.
double REllGnpClosedForm(const Motif& h, int ell, double p);

absl::StatusOr<ParamTable> GeneralSchedule(const DistributionTable& table, double eps);

// Noninduced efficient motif schedule; sigma is the motif's jumbledness
// exponent and r_ell uses noninduced G(n, p) densities.
absl::StatusOr<ParamTable> MotifEfficientSchedule(const Motif& h, double p, double eps,
                                                  double c_const = 1.0);

struct McDiarmidResult {
  bool precondition_ok = false;
  double bound = 1.0;
  std::string violation;
};
McDiarmidResult McDiarmidBound(double q, double delta, absl::Span<const double> c,
                               double f_max, double f_mean);

}  // namespace motifqc

#endif  // MOTIFQC_PARAMS_H_

// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/params.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "motifqc/counting.h"
#include "oracles.h"

namespace motifqc {
namespace {

TEST(SampleCountTest, AAndEExamples) {
  EXPECT_NEAR(ASEll(4, 2, 10), 0.12, 1e-15);
  EXPECT_NEAR(ESEll(4, 2, 10, 0.5), 5.4, 1e-12);
  EXPECT_EQ(ASEll(2, 3, 10), 0.0);
  EXPECT_EQ(ESEll(2, 3, 10, 0.5), 0.0);
}

TEST(SampleCountTest, VertexCountConvention) {
  for (int64_t s : {1, 7, 600}) {
    for (int64_t n : {10, 2000}) {
      for (double p : {0.1, 0.5}) EXPECT_NEAR(ESEll(s, 1, n, p), s, 1e-9 * s);
    }
  }
}

// Mean edge count over random multisets is C_2(G) A(s, 2, n).
TEST(SampleCountTest, MultisetExpectationMonteCarlo) {
  std::mt19937_64 gen(10);
  const Graph g = oracle::RandomGraph(10, 0.5, gen);
  const double truth = static_cast<double>(*CountCliques(g, 2)) * ASEll(4, 2, 10);
  std::uniform_int_distribution<int> pick(0, 9);
  const int trials = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    VertexMultiset s(4);
    for (Vertex& v : s) v = pick(gen);
    const double c = static_cast<double>(*CountInMultiset(g, s, Motif::Complete(2)));
    sum += c;
    sum_sq += c * c;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sum_sq / trials - mean * mean) / trials);
  EXPECT_NEAR(mean, truth, 3 * se);
}

TEST(CliqueScheduleTest, Examples) {
  const ParamTable t = *CliqueSchedule(3, 0.5, 0.3);
  EXPECT_DOUBLE_EQ(t.eps_ell[2], 0.3);
  EXPECT_NEAR(t.alpha_ell[2], 0.0225 / 128, 1e-15);
  EXPECT_NEAR(t.alpha_ell[2], 1.7578e-4, 1e-8);
  // Independent evaluation in extended precision.
  const long double s3 = 9.0L * 8192 / (0.0625L * 0.09L) *
                         (3 * std::log(18.0L) - 10 * std::log(0.5L) - std::log(0.3L));
  EXPECT_NEAR(t.s_ell[3], std::ceil(s3), 1.0);
  EXPECT_NEAR(t.s_star / 1e8, 2.20, 0.005);
  EXPECT_FALSE(SampleSize(t).ok());
}

TEST(CliqueScheduleTest, DomainErrors) {
  EXPECT_FALSE(CliqueSchedule(3, 0.6, 0.3).ok());
  EXPECT_FALSE(CliqueSchedule(3, 0.0, 0.3).ok());
  EXPECT_FALSE(CliqueSchedule(3, 0.3, 0.0).ok());
  EXPECT_FALSE(CliqueSchedule(3, 0.3, 1.0).ok());
  EXPECT_FALSE(EfficientSchedule(3, 0.3, 0.3, 0.0).ok());
}

TEST(CliqueScheduleTest, MonotoneInLevel) {
  for (int k = 3; k <= 6; ++k) {
    for (double p : {0.1, 0.3, 0.5}) {
      for (double eps : {0.1, 0.3, 0.6}) {
        const ParamTable t = *CliqueSchedule(k, p, eps);
        for (int ell = 2; ell < k; ++ell) {
          EXPECT_LT(t.eps_ell[ell], t.eps_ell[ell + 1]);
          EXPECT_LE(t.alpha_ell[ell + 1], t.alpha_ell[ell]);
        }
      }
    }
  }
}

TEST(CliqueScheduleTest, SampleSizeBeatsLevelTail) {
  for (int k = 2; k <= 5; ++k) {
    for (double p : {0.3, 0.5}) {
      for (double eps : {0.1, 0.3}) {
        const ParamTable t = *CliqueSchedule(k, p, eps);
        for (int ell = 3; ell <= k; ++ell) {
          EXPECT_LE(std::exp(-t.alpha_ell[ell - 1] * t.s_ell[ell]),
                    std::pow(p, oracle::Choose(ell + 2, 2)))
              << k << " " << p << " " << eps << " " << ell;
        }
      }
    }
  }
}

TEST(EfficientScheduleTest, Examples) {
  for (int k = 2; k <= 6; ++k) {
    EXPECT_DOUBLE_EQ(EfficientSchedule(k, 0.3, 0.2)->eps_ell[k - 1], 0.2);
  }
  EXPECT_NEAR(EfficientSchedule(3, 0.5, 0.3, 1.0)->delta_jumbled, 1.302e-3, 1e-6);
  const ParamTable basic = *CliqueSchedule(4, 0.3, 0.2);
  const ParamTable eff = *EfficientSchedule(4, 0.3, 0.2, 1.0);
  for (int ell = 1; ell <= 4; ++ell) EXPECT_GE(eff.s_ell[ell], basic.s_ell[ell]);
}

TEST(OverrideTest, CalibratedSampleSize) {
  ParamTable t = *CliqueSchedule(3, 0.3, 0.4);
  EXPECT_EQ(t.mode, ScaleMode::kPaper);
  ASSERT_TRUE(OverrideSampleSize(t, 600).ok());
  EXPECT_EQ(t.mode, ScaleMode::kCalibrated);
  EXPECT_EQ(*SampleSize(t), 600);
  EXPECT_FALSE(OverrideSampleSize(t, 0).ok());
  ASSERT_TRUE(OverrideJumbledDelta(t, 0.1).ok());
  EXPECT_DOUBLE_EQ(t.delta_jumbled, 0.1);
  EXPECT_DOUBLE_EQ(LevelTolerance(t, 2), 0.2);
  t.per_level_thresholds = true;
  EXPECT_DOUBLE_EQ(LevelTolerance(t, 3), t.eps_ell[2]);
}

TEST(REllTest, Examples) {
  const DistributionTable tri = *GnpTable(Motif::Complete(3), 100, 0.5);
  EXPECT_NEAR(tri.r_ell[3], 0.0625, 1e-15);
  const DistributionTable star = *GnpTable(Motif::Star(4), 100, 0.3);
  EXPECT_NEAR(star.r_ell[4], std::pow(0.3, 6), 1e-15);
  EXPECT_NEAR(*REll(*GnpTable(Motif::Complete(2), 10, 0.5), 2), 0.25, 1e-15);
}

TEST(REllTest, ClosedFormMatchesDefinition) {
  for (int k = 2; k <= 5; ++k) {
    for (uint64_t m = 0; m < (uint64_t{1} << Motif::NumPairs(k)); ++m) {
      const Motif h = Motif::FromMask(k, m);
      for (double p : {0.1, 0.3, 0.5}) {
        const DistributionTable t = *GnpTable(h, 50, p);
        for (int ell = 1; ell <= k; ++ell) {
          ASSERT_NEAR(t.r_ell[ell], REllGnpClosedForm(h, ell, p), 1e-12 * t.r_ell[ell])
              << h.ToString() << " p=" << p << " ell=" << ell;
        }
      }
    }
  }
}

TEST(REllTest, NonincreasingForCliques) {
  for (double p : {0.1, 0.3, 0.5}) {
    const DistributionTable t = *GnpTable(Motif::Complete(5), 50, p);
    for (int ell = 2; ell <= 5; ++ell) EXPECT_GE(t.r_ell[ell - 1], t.r_ell[ell]);
  }
}

TEST(REllTest, ZeroDenominatorIsAnError) {
  std::map<uint32_t, double> d;
  for (uint32_t m = 1; m < 4; ++m) d[m] = 0.0;
  EXPECT_FALSE(UserTable(Motif::Complete(2), 10, d).ok());
  d[1] = d[2] = 1.0;
  d[3] = 0.2;
  const DistributionTable t = *UserTable(Motif::Complete(2), 10, d);
  EXPECT_NEAR(t.r_ell[2], 0.04, 1e-15);
  EXPECT_FALSE(GnpTable(Motif::Complete(3), 10, 0.7).ok());
}

TEST(TableTest, ExpectationsFollowDensities) {
  const DistributionTable t = *GnpTable(Motif::Path(3), 20, 0.3);
  const uint32_t full = 7;
  EXPECT_NEAR(t.Expectation(full), 20.0 * 19 * 18 * 0.09 * 0.7, 1e-9);
  EXPECT_NEAR(t.SampleExpectation(full, 10), t.Expectation(full) * ASEll(10, 3, 20), 1e-9);
}

TEST(TableTest, SbmTableWithOneBlockMatchesGnp) {
  const Motif h = Motif::Path(4);
  const DistributionTable a = *GnpTable(h, 30, 0.4);
  const DistributionTable b = *SbmTable(h, {30}, {{0.4}});
  for (uint32_t m = 1; m < 16; ++m) EXPECT_NEAR(a.density[m], b.density[m], 1e-12);
}

TEST(GeneralScheduleTest, CliqueReducesToBasicUpToLevelPower) {
  const double p = 0.4, eps = 0.2;
  const ParamTable basic = *CliqueSchedule(3, p, eps);
  const ParamTable general = *GeneralSchedule(*GnpTable(Motif::Complete(3), 100, p), eps);
  for (int ell = 2; ell <= 3; ++ell) EXPECT_DOUBLE_EQ(general.eps_ell[ell], basic.eps_ell[ell]);
  // r_3(K3) = p^4 under G(n, p), so only the ell^4 versus ell^2 factor remains.
  EXPECT_NEAR(general.alpha_ell[3] / basic.alpha_ell[3], 1.0 / 9.0, 1e-12);
  EXPECT_GT(general.s_star, basic.s_star);
  EXPECT_FALSE(GeneralSchedule(*GnpTable(Motif::Complete(3), 100, p), 1.5).ok());
}

TEST(McDiarmidTest, Examples) {
  const std::vector<double> ones = {1, 1, 1, 1};
  const McDiarmidResult a = McDiarmidBound(0, 2, ones, 4, 2);
  EXPECT_TRUE(a.precondition_ok);
  EXPECT_DOUBLE_EQ(a.bound, 1.0);
  EXPECT_FALSE(McDiarmidBound(0.6, 2, ones, 4, 2).precondition_ok);
  const McDiarmidResult b = McDiarmidBound(0, 20, ones, 4, 2);
  EXPECT_NEAR(b.bound, 3.86e-22, 0.01e-22);
}

TEST(McDiarmidTest, Monotonicity) {
  std::vector<double> c = {0.5, 1, 2};
  double last = 2.0;
  for (double delta = 0.5; delta < 20; delta += 0.5) {
    const double b = McDiarmidBound(0.001, delta, c, 1, 1).bound;
    EXPECT_LE(b, last);
    last = b;
  }
  for (size_t i = 0; i < c.size(); ++i) {
    std::vector<double> bigger = c;
    bigger[i] += 1.0;
    EXPECT_GE(McDiarmidBound(0.001, 8, bigger, 1, 1).bound,
              McDiarmidBound(0.001, 8, c, 1, 1).bound);
  }
}

TEST(McDiarmidTest, BoundsEmpiricalCoinTail) {
  const int s = 64, trials = 100000;
  std::mt19937_64 gen(99);
  std::bernoulli_distribution coin(0.5);
  int deviations = 0;
  const double delta = s / 4.0;
  for (int t = 0; t < trials; ++t) {
    int f = 0;
    for (int i = 0; i < s; ++i) f += coin(gen);
    deviations += std::abs(f - s / 2.0) >= delta;
  }
  const std::vector<double> c(s, 1.0);
  const McDiarmidResult r = McDiarmidBound(0, delta, c, s, s / 2.0);
  ASSERT_TRUE(r.precondition_ok);
  EXPECT_LE(static_cast<double>(deviations) / trials, r.bound);
}

}  // namespace
}  // namespace motifqc

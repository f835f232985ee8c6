// Copyright 2026 The Smoothtest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "../oracles.hpp"
#include "smoothtest/errors.hpp"
#include "smoothtest/experiment.hpp"
#include "smoothtest/generators.hpp"
#include "smoothtest/univariate.hpp"

namespace smoothtest {
namespace {

std::vector<double> draw(RngStream& s, std::size_t n, bool ties = false) {
  std::vector<double> v(n);
  for (auto& x : v) x = ties ? std::round(2.0 * s.gaussian()) : s.gaussian();
  return v;
}

std::vector<double> to_vector(const UniSample& s) { return {s.values().begin(), s.values().end()}; }

TEST(SmoothStatisticTest, HandComputedSingletons) {
  const BasisSystem trig(BasisKind::Trigonometric, 1);
  EXPECT_NEAR(smooth_statistic(UniSample({0.0}), UniSample({1.0}), trig), 1.0, 1e-15);
}

TEST(SmoothStatisticTest, SymmetricWhenSizesMatch) {
  RngStream s(21);
  const BasisSystem basis(BasisKind::Trigonometric, 5);
  const UniSample x(draw(s, 12));
  EXPECT_EQ(smooth_statistic(x, x, basis), smooth_statistic(x, x, basis));
  const UniSample y(draw(s, 12));
  bool swapped = true;
  smooth_coefficients(x, y, basis, &swapped);
  EXPECT_FALSE(swapped);
  smooth_coefficients(x, UniSample(draw(s, 13)), basis, &swapped);
  EXPECT_TRUE(swapped);
}

TEST(SmoothStatisticTest, MatchesDoubleLoopExactly) {
  RngStream s(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + s.uniform_index(10), m = 1 + s.uniform_index(10);
    const bool ties = trial % 3 == 0;
    const auto xv = draw(s, n, ties), yv = draw(s, m, ties);
    const BasisKind kind = trial % 2 ? BasisKind::Legendre : BasisKind::Trigonometric;
    const BasisSystem basis(kind, 1 + static_cast<int>(s.uniform_index(6)));
    const UniSample x(xv), y(yv);
    ASSERT_EQ(smooth_statistic(x, y, basis), oracle::smooth_statistic(xv, yv, basis));
    ASSERT_EQ(bgx_statistic(x, y, basis), oracle::bgx_statistic(xv, yv, basis));
  }
  const auto xv = draw(s, 6), yv = draw(s, 6);
  const BasisSystem basis(BasisKind::Trigonometric, 3);
  EXPECT_EQ(smooth_statistic(UniSample(xv), UniSample(yv), basis), oracle::smooth_statistic(xv, yv, basis));
}

TEST(SmoothStatisticTest, NondecreasingInTruncation) {
  RngStream s(23);
  for (int trial = 0; trial < 50; ++trial) {
    const UniSample x(draw(s, 30)), y(draw(s, 25));
    for (BasisKind kind : {BasisKind::Trigonometric, BasisKind::Legendre}) {
      double previous = 0.0;
      for (int d = 1; d <= 12; ++d) {
        const double v = smooth_statistic(x, y, BasisSystem(kind, d));
        ASSERT_GE(v, previous);
        previous = v;
      }
    }
  }
}

TEST(GaussianMaxTest, CdfAndCriticalValue) {
  for (int d : {1, 3, 12}) EXPECT_NEAR(max_abs_gaussian_cdf(10.0, d), 1.0, 1e-12);
  EXPECT_NEAR(max_abs_gaussian_cdf(1.959964, 1), 0.95, 1e-6);
  EXPECT_NEAR(max_abs_gaussian_cdf(1.959964, 1), 2.0 * oracle::normal_cdf(1.959964) - 1.0, 1e-13);
  const double one = max_abs_gaussian_cdf(1.3, 1);
  EXPECT_NEAR(max_abs_gaussian_cdf(1.3, 2), one * one, 1e-15);
  EXPECT_THROW(max_abs_gaussian_cdf(-0.1, 2), DomainError);

  EXPECT_NEAR(smooth_critical_value(0.05, 1), 1.959964, 1e-6);
  // Root of (2 Phi(t) - 1)^12 = 0.95, from the bisection oracle.
  EXPECT_NEAR(smooth_critical_value(0.05, 12), 2.857843, 1e-6);
  double previous = 0.0;
  for (int d = 1; d <= 30; ++d) {
    for (double alpha : {0.01, 0.05, 0.1, 0.5}) {
      const double c = smooth_critical_value(alpha, d);
      EXPECT_NEAR(c, oracle::smooth_critical_value(alpha, d), 1e-9);
      EXPECT_NEAR(max_abs_gaussian_cdf(c, d), 1.0 - alpha, 1e-8);
    }
    const double c = smooth_critical_value(0.05, d);
    EXPECT_GT(c, previous);
    previous = c;
  }
  EXPECT_THROW(smooth_critical_value(0.0, 3), DomainError);
  EXPECT_THROW(smooth_critical_value(0.05, 0), DomainError);
}

TEST(SmoothTestTest, ReportContract) {
  RngStream s(24);
  const UniSample x(draw(s, 60)), y(draw(s, 40));
  const BasisSystem basis(BasisKind::Trigonometric, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const UniSample a(draw(s, 40)), b(draw(s, 30));
    const bool loose = smooth_test(a, b, basis, 0.5).reject;
    const bool strict = smooth_test(a, b, basis, 0.01).reject;
    EXPECT_TRUE(loose || !strict);
  }
  const TestReport r = smooth_test(x, y, basis, 0.05);
  EXPECT_EQ(r.method, "smooth");
  ASSERT_TRUE(r.critical_value.has_value());
  EXPECT_FALSE(r.p_value.has_value());
  EXPECT_EQ(r.reject, r.statistic >= *r.critical_value);
  EXPECT_EQ(r.d, 6);
  EXPECT_EQ(r.n, 60u);
  EXPECT_EQ(r.m, 40u);
  EXPECT_TRUE(r.notes.empty());

  const TestReport small = smooth_test(UniSample({1, 2, 2}), UniSample({0.5, 3}), basis, 0.05);
  EXPECT_EQ(small.notes.size(), 2u);  // d > min(n, m) and ties
}

TEST(SmoothTestTest, FarShiftRejects) {
  RngStream s(25);
  auto xv = draw(s, 100), yv = draw(s, 100);
  for (auto& v : yv) v += 10.0;
  const UniSample x(xv), y(yv);
  for (int d = 1; d <= 12; ++d) {
    for (BasisKind kind : {BasisKind::Trigonometric, BasisKind::Legendre}) {
      EXPECT_TRUE(smooth_test(x, y, BasisSystem(kind, d), 0.05).reject) << d;
    }
  }
  EXPECT_TRUE(bgx_test(x, y, BasisSystem(BasisKind::Legendre, 4), 0.05).reject);
}

TEST(SmoothTestTest, NullSizeWithLargeSamples) {
  ExperimentConfig cfg;
  cfg.x_spec = cfg.y_spec = parse_generator("normal(0,1)");
  cfg.n = cfg.m = 500;
  cfg.method = parse_method("smooth:trig:4");
  cfg.replicates = 2000;
  cfg.seed = 4242;
  const ExperimentResult r = size_experiment(cfg);
  EXPECT_GE(r.rate, 0.035);
  EXPECT_LE(r.rate, 0.065);
}

TEST(EdfStatisticsTest, HandValues) {
  EXPECT_DOUBLE_EQ(ks_statistic(UniSample({1, 2}), UniSample({3, 4})), 1.0);
  // (F - G)^2 at 1, 2, 3, 4 is 1/4, 1, 1/4, 0; each pooled point weighs 1/4.
  EXPECT_DOUBLE_EQ(cvm_statistic(UniSample({1, 2}), UniSample({3, 4})), 0.375);
  const UniSample a({0.3, -1.0, 2.0});
  EXPECT_EQ(ks_statistic(a, a), 0.0);
  EXPECT_EQ(cvm_statistic(a, a), 0.0);
  EXPECT_EQ(edf_l2_distance(a, a), 0.0);
  // F - G is 1/2 on [0, 1), 0 on [1, 2), 1/2 on [2, 3).
  EXPECT_DOUBLE_EQ(edf_l2_distance(UniSample({0, 2}), UniSample({1, 3})), 0.5);
}

TEST(EdfStatisticsTest, MatchPooledGridOracle) {
  RngStream s(26);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + s.uniform_index(8), m = 1 + s.uniform_index(8);
    const bool ties = trial % 2 == 0;
    const auto xv = draw(s, n, ties), yv = draw(s, m, ties);
    const UniSample x(xv), y(yv);
    ASSERT_EQ(ks_statistic(x, y), oracle::ks_statistic(xv, yv));
    ASSERT_EQ(cvm_statistic(x, y), oracle::cvm_statistic(xv, yv));
    ASSERT_NEAR(edf_l2_distance(x, y), oracle::edf_l2(xv, yv), 1e-13);
  }
}

TEST(EdfStatisticsTest, RankInvariance) {
  RngStream s(27);
  const BasisSystem trig(BasisKind::Trigonometric, 6), legendre(BasisKind::Legendre, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto xv = draw(s, 15), yv = draw(s, 11);
    auto tx = xv, ty = yv;
    for (auto& v : tx) v = std::atan(v) * 3.0 + 1.0;
    for (auto& v : ty) v = std::atan(v) * 3.0 + 1.0;
    const UniSample x(xv), y(yv), a(tx), b(ty);
    EXPECT_EQ(ks_statistic(x, y), ks_statistic(a, b));
    EXPECT_EQ(cvm_statistic(x, y), cvm_statistic(a, b));
    EXPECT_EQ(smooth_statistic(x, y, trig), smooth_statistic(a, b, trig));
    EXPECT_EQ(bgx_statistic(x, y, legendre), bgx_statistic(a, b, legendre));
  }
}

TEST(PermutationTest, ConstantStatisticGivesOne) {
  RngStream s(28);
  const TwoSampleStatistic constant = [](const UniSample&, const UniSample&) { return 2.0; };
  EXPECT_EQ(permutation_pvalue(constant, UniSample(draw(s, 5)), UniSample(draw(s, 4)), 99, s), 1.0);
}

TEST(PermutationTest, StrictlyLargestObserved) {
  RngStream s(29);
  const auto yv = draw(s, 20);
  auto sorted_y = yv;
  std::sort(sorted_y.begin(), sorted_y.end());
  const TwoSampleStatistic original = [&](const UniSample&, const UniSample& y) {
    return std::vector<double>(y.sorted().begin(), y.sorted().end()) == sorted_y ? 1.0 : 0.0;
  };
  EXPECT_DOUBLE_EQ(permutation_pvalue(original, UniSample(draw(s, 20)), UniSample(yv), 199, s), 1.0 / 200.0);
}

TEST(PermutationTest, ThreeSplitsByHand) {
  const UniSample x({0.1, 0.7}), y({0.4});
  const double p = exhaustive_permutation_pvalue(ks_statistic, x, y);
  const auto f = [](const std::vector<double>& a, const std::vector<double>& b) { return oracle::ks_statistic(a, b); };
  EXPECT_EQ(p, oracle::exhaustive_pvalue(f, to_vector(x), to_vector(y)));
  // The observed split has sup |F - G| = 1/2, the other two 1, so every
  // split counts and p = (1 + 3) / (3 + 1).
  EXPECT_EQ(p, 1.0);
}

TEST(PermutationTest, MatchesEnumerationAndMonteCarlo) {
  RngStream s(30);
  const auto ks = [](const std::vector<double>& a, const std::vector<double>& b) { return oracle::ks_statistic(a, b); };
  const auto cvm = [](const std::vector<double>& a, const std::vector<double>& b) { return oracle::cvm_statistic(a, b); };
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + s.uniform_index(5), m = 1 + s.uniform_index(8 - n);
    const auto xv = draw(s, n), yv = draw(s, m);
    const UniSample x(xv), y(yv);
    ASSERT_EQ(exhaustive_permutation_pvalue(ks_statistic, x, y), oracle::exhaustive_pvalue(ks, xv, yv));
    ASSERT_EQ(exhaustive_permutation_pvalue(cvm_statistic, x, y), oracle::exhaustive_pvalue(cvm, xv, yv));
  }
  const auto xv = draw(s, 4), yv = draw(s, 4);
  const double exact = exhaustive_permutation_pvalue(cvm_statistic, UniSample(xv), UniSample(yv));
  RngStream ps(31);
  const double mc = permutation_pvalue(cvm_statistic, UniSample(xv), UniSample(yv), 20000, ps);
  // 70 splits; Monte Carlo and exact p differ only by sampling noise and the +1 terms.
  EXPECT_NEAR(mc, exact * 71.0 / 70.0 - 1.0 / 70.0, 0.015);
}

TEST(PermutationTest, ReportsCarryPValues) {
  RngStream s(32);
  const UniSample x(draw(s, 30)), y(draw(s, 20));
  RngStream a(5), b(5);
  const TestReport ks = ks_test(x, y, 0.05, 199, a);
  EXPECT_EQ(ks.method, "ks");
  ASSERT_TRUE(ks.p_value);
  EXPECT_GE(*ks.p_value, 1.0 / 200.0);
  EXPECT_LE(*ks.p_value, 1.0);
  EXPECT_EQ(ks.reject, *ks.p_value <= 0.05);
  EXPECT_EQ(*ks_test(x, y, 0.05, 199, b).p_value, *ks.p_value);
  EXPECT_EQ(cvm_test(x, y, 0.05, 199, a).method, "cvm");
}

TEST(BgxTest, ChiSquareCalibration) {
  RngStream s(33);
  const UniSample x(draw(s, 50)), y(draw(s, 40));
  const TestReport r = bgx_test(x, y, BasisSystem(BasisKind::Legendre, 4), 0.05);
  EXPECT_NEAR(*r.critical_value, oracle::chi2_quantile(0.95, 4), 1e-9);
  EXPECT_EQ(r.reject, r.statistic >= *r.critical_value);
  EXPECT_EQ(r.method, "bgx");
}

TEST(SchwarzTest, RangeAndSingleDirectionSignal) {
  RngStream s(34);
  const UniSample x(draw(s, 40)), y(draw(s, 30));
  EXPECT_EQ(select_d_schwarz(x, y, BasisKind::Trigonometric, 1), 1);
  for (int dmax : {2, 5, 20}) {
    const int d = select_d_schwarz(x, y, BasisKind::Legendre, dmax);
    EXPECT_GE(d, 1);
    EXPECT_LE(d, dmax);
  }
  EXPECT_THROW(select_d_schwarz(x, y, BasisKind::Legendre, 0), DomainError);

  const Generator uniform(parse_generator("uniform(0,1)"));
  const Generator tilted(parse_generator("smoothalt(trig;0.8)"));
  int ones = 0;
  constexpr int kReplicates = 200;
  for (int r = 0; r < kReplicates; ++r) {
    RngStream rs = RngStream(35).child(r);
    RngStream xs = rs.child(0), ys = rs.child(1);
    const UniSample a = uniform.sample_univariate(200, xs), b = tilted.sample_univariate(200, ys);
    ones += select_d_schwarz(a, b, BasisKind::Trigonometric, 20) == 1 ? 1 : 0;
  }
  EXPECT_GT(ones, kReplicates / 2);
}

}  // namespace
}  // namespace smoothtest

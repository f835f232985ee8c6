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

#include <cmath>
#include <numbers>

#include "../oracles.hpp"
#include "smoothtest/empirical.hpp"
#include "smoothtest/errors.hpp"

namespace smoothtest {
namespace {

std::vector<double> gaussians(RngStream& s, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = s.gaussian();
  return v;
}

TEST(UniSampleTest, Construction) {
  EXPECT_THROW(UniSample({}), DomainError);
  EXPECT_THROW(UniSample({1.0, std::nan("")}), DomainError);
  EXPECT_THROW(UniSample({1.0, INFINITY}), DomainError);
  const UniSample s({3.0, 1.0, 2.0, 1.0});
  EXPECT_TRUE(s.has_ties());
  EXPECT_EQ(std::vector<double>(s.sorted().begin(), s.sorted().end()), (std::vector<double>{1, 1, 2, 3}));
  EXPECT_EQ(s.values()[0], 3.0);
  EXPECT_FALSE(UniSample({1.0, 2.0}).has_ties());
}

TEST(EdfTest, Evaluation) {
  const UniSample s({1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(edf_eval(s, 2.0), 2.0 / 3.0);
  EXPECT_EQ(edf_eval(s, 0.5), 0.0);
  EXPECT_EQ(edf_eval(s, 3.0), 1.0);
  EXPECT_DOUBLE_EQ(edf_eval(s, std::nextafter(2.0, 0.0)), 1.0 / 3.0);
}

TEST(EdfTest, AgreesWithCountingOracle) {
  RngStream s(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> v(1 + s.uniform_index(30));
    for (auto& x : v) x = std::round(s.gaussian() * 3.0);  // ties on purpose
    const UniSample sample(v);
    for (double t = -10.0; t <= 10.0; t += 0.5) {
      ASSERT_EQ(edf_eval(sample, t),
                static_cast<double>(oracle::count_at_most(v, t)) / static_cast<double>(v.size()));
    }
  }
}

TEST(PitTest, Values) {
  const UniSample x({1.0, 3.0, 5.0});
  const auto v = pit_values(x, UniSample({2.0, 4.0}));
  ASSERT_EQ(v.size(), 2u);
  EXPECT_DOUBLE_EQ(v[0], 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(v[1], 2.0 / 3.0);
  for (double z : pit_values(x, UniSample({-1.0, 0.0}))) EXPECT_EQ(z, 0.0);
  for (double z : pit_values(x, UniSample({5.0, 9.0}))) EXPECT_EQ(z, 1.0);
  EXPECT_EQ(pit_counts(x, UniSample({3.0, 0.0})), (std::vector<std::size_t>{2, 0}));
}

TEST(PitTest, RankInvariance) {
  RngStream s(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto xv = gaussians(s, 10), yv = gaussians(s, 7);
    auto tx = xv, ty = yv;
    for (auto& v : tx) v = std::exp(v) + 2.0 * v * v * v;
    for (auto& v : ty) v = std::exp(v) + 2.0 * v * v * v;
    EXPECT_EQ(pit_values(UniSample(xv), UniSample(yv)), pit_values(UniSample(tx), UniSample(ty)));
  }
}

TEST(PooledEdfTest, ConvexCombination) {
  EXPECT_DOUBLE_EQ(pooled_edf(UniSample({1.0}), UniSample({2.0}), 1.5), 0.5);
  const UniSample a({0.1, 0.4, 0.9}), b({0.2, 0.3, 0.8});
  for (double t = 0.0; t <= 1.0; t += 0.05) {
    EXPECT_DOUBLE_EQ(pooled_edf(a, b, t), 0.5 * (edf_eval(a, t) + edf_eval(b, t)));
    EXPECT_DOUBLE_EQ(pooled_edf(a, a, t), edf_eval(a, t));
  }
}

TEST(MultiSampleTest, Layout) {
  const MultiSample m = MultiSample::from_rows({{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(m.dim(), 2u);
  EXPECT_EQ(m.row(1)[1], 4.0);
  const UniSample c = m.column(1);
  EXPECT_EQ(std::vector<double>(c.values().begin(), c.values().end()), (std::vector<double>{2, 4, 6}));
  EXPECT_THROW(MultiSample::from_rows({{1, 2}, {3}}), DomainError);
  EXPECT_THROW(MultiSample(2, {1.0, 2.0, 3.0}), DomainError);
  EXPECT_THROW(MultiSample(0, {}), DomainError);
  EXPECT_EQ(MultiSample::from_univariate(UniSample({4.0, 5.0})).dim(), 1u);
}

TEST(DirectionTest, SphericalCoordinates) {
  const double zero = 0.0;
  const auto e1 = Direction::from_angles(std::span<const double>(&zero, 1));
  EXPECT_EQ(std::vector<double>(e1.unit().begin(), e1.unit().end()), (std::vector<double>{1.0, 0.0}));
  const std::vector<double> angles = {std::numbers::pi / 2, 0.0};
  const auto e2 = Direction::from_angles(angles);
  EXPECT_NEAR(e2.unit()[0], 0.0, 1e-15);
  EXPECT_NEAR(e2.unit()[1], 1.0, 1e-15);
  EXPECT_NEAR(e2.unit()[2], 0.0, 1e-15);
}

TEST(DirectionTest, RandomAndRoundTrip) {
  RngStream s(13);
  for (std::size_t p = 2; p <= 6; ++p) {
    for (int i = 0; i < 100; ++i) {
      const Direction u = Direction::random(p, s);
      double norm = 0.0;
      for (double c : u.unit()) norm += c * c;
      ASSERT_NEAR(std::sqrt(norm), 1.0, 1e-12);
      const Direction back = Direction::from_angles(u.angles());
      for (std::size_t c = 0; c < p; ++c) ASSERT_NEAR(back.unit()[c], u.unit()[c], 1e-12);
    }
  }
  const std::vector<double> zero(3, 0.0);
  EXPECT_THROW(Direction::from_vector(zero), DomainError);
}

TEST(ProjectTest, Projections) {
  const MultiSample m = MultiSample::from_rows({{1, 1}, {2, -3}});
  const auto first = project(m, Direction::axis(2, 0));
  EXPECT_EQ(std::vector<double>(first.values().begin(), first.values().end()), (std::vector<double>{1, 2}));
  const auto neg = project(m, Direction::axis(2, 0, true));
  EXPECT_EQ(neg.values()[1], -2.0);
  const std::vector<double> diag = {1.0, 1.0};
  EXPECT_NEAR(project(m, Direction::from_vector(diag)).values()[0], std::numbers::sqrt2, 1e-15);
  EXPECT_THROW(project(m, Direction::axis(3, 0)), DomainError);
}

TEST(ProjectTest, EdfOfProjectionCountsDirectly) {
  RngStream s(14);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t p = 2 + s.uniform_index(3), n = 5 + s.uniform_index(20);
    const auto rows = gaussians(s, n * p);
    const MultiSample m(p, rows);
    const Direction u = Direction::random(p, s);
    const UniSample proj = project(m, u);
    const std::vector<double> uv(u.unit().begin(), u.unit().end());
    const auto direct = oracle::project(rows, p, uv);
    for (double t = -3.0; t <= 3.0; t += 0.25) {
      ASSERT_EQ(edf_eval(proj, t), static_cast<double>(oracle::count_at_most(direct, t)) / static_cast<double>(n));
    }
  }
}

}  // namespace
}  // namespace smoothtest

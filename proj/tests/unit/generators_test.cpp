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
#include <functional>
#include <memory>
#include <numbers>

#include "../oracles.hpp"
#include "smoothtest/errors.hpp"
#include "smoothtest/generators.hpp"

namespace smoothtest {
namespace {

using std::numbers::pi;
using Density = std::function<double(double)>;

constexpr std::size_t kDraws = 100000;

// Piecewise-linear CDF from composite Simpson on [lo, hi], normalized by the
// computed total mass.
class NumericCdf {
 public:
  NumericCdf(const Density& f, double lo, double hi, int cells = 20000) : lo_(lo), h_((hi - lo) / cells) {
    cumulative_.push_back(0.0);
    for (int i = 0; i < cells; ++i) {
      const double a = lo + i * h_;
      cumulative_.push_back(cumulative_.back() + h_ / 6.0 * (f(a) + 4.0 * f(a + h_ / 2.0) + f(a + h_)));
    }
    mass_ = cumulative_.back();
  }
  double mass() const { return mass_; }
  double operator()(double x) const {
    const double pos = (x - lo_) / h_;
    if (pos <= 0.0) return 0.0;
    const auto i = static_cast<std::size_t>(pos);
    if (i + 1 >= cumulative_.size()) return 1.0;
    const double w = pos - static_cast<double>(i);
    return ((1.0 - w) * cumulative_[i] + w * cumulative_[i + 1]) / mass_;
  }

 private:
  double lo_, h_, mass_ = 1.0;
  std::vector<double> cumulative_;
};

std::vector<double> draws(const std::string& label, std::uint64_t seed, std::size_t n = kDraws) {
  RngStream s(seed);
  const UniSample sample = Generator(parse_generator(label)).sample_univariate(n, s);
  return {sample.values().begin(), sample.values().end()};
}

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi); }

double example1(double mu, double x) {
  if (std::abs(x) >= 1.0) return 0.0;
  if (std::abs(x) < mu) return 0.5 + 2.0 * x * (mu - std::abs(x)) / (mu * mu);
  return 0.5;
}

TEST(GeneratorParseTest, CanonicalRoundTrip) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"gamma(2,2)", "gamma(2,2)"},
      {"normal(0, 1)", "normal(0,1)"},
      {"t(7)", "t(7)"},
      {"pareto(3,1,0)", "pareto(3,1,0)"},
      {"stable(1.5,0,1,0)", "stable(1.5,0,1,0)"},
      {"example(4,1)", "example(4,1)"},
      {"example(5,1.5,clipped)", "example(5,1.5,clipped)"},
      {"smoothalt(legendre;0.8,0,0)", "smoothalt(legendre;0.8,0,0)"},
      {"mvnormal(3)", "mvnormal(3,identity)"},
      {"mvnormal(3,ar1:0.5)", "mvnormal(3,ar1:0.5)"},
      {"mvt(3,4)", "mvt(3,4,identity)"},
      {"mvt(5,8,ar1:0.25)", "mvt(5,8,ar1:0.25)"},
  };
  for (const auto& [text, canonical] : cases) {
    EXPECT_EQ(to_string(parse_generator(text)), canonical) << text;
    EXPECT_EQ(to_string(parse_generator(canonical)), canonical);
  }
}

TEST(GeneratorParseTest, Errors) {
  EXPECT_THROW(parse_generator("normal"), InputError);
  EXPECT_THROW(parse_generator("normal(0)"), InputError);
  EXPECT_THROW(parse_generator("cauchy(0,1)"), InputError);
  EXPECT_THROW(parse_generator("normal(0,x)"), InputError);
  EXPECT_THROW(parse_generator("example(5,1,wide)"), InputError);
  EXPECT_THROW(parse_generator("mvnormal(3,banded)"), InputError);
  EXPECT_THROW(parse_generator("example(10,0)"), DomainError);
  EXPECT_THROW(Generator(parse_generator("normal(0,-1)")), DomainError);
  EXPECT_THROW(Generator(parse_generator("uniform(1,1)")), DomainError);
  EXPECT_THROW(Generator(parse_generator("stable(2.5,0,1,0)")), DomainError);
  EXPECT_THROW(Generator(parse_generator("mvnormal(3,ar1:1)")), DomainError);
}

TEST(GeneratorParseTest, ParameterRanges) {
  EXPECT_THROW(Generator(ExampleModel{1, 1.5}), DomainError);
  EXPECT_THROW(Generator(ExampleModel{2, 0.25}), DomainError);
  EXPECT_THROW(Generator(ExampleModel{3, -1.5}), DomainError);
  EXPECT_THROW(Generator(ExampleModel{4, 2.5}), DomainError);
  EXPECT_THROW(Generator(ExampleModel{5, 1.5}), DomainError);
  EXPECT_NO_THROW(Generator(ExampleModel{5, 1.5, true}));
  EXPECT_THROW(Generator(ExampleModel{8, 0.6}), DomainError);
  EXPECT_EQ(example_param_range(2), std::make_pair(0.5, 5.0));
  EXPECT_EQ(to_string(example_baseline(2)), "uniform(-1,1)");
  EXPECT_EQ(to_string(example_baseline(4)), "example(4,0)");
}

TEST(GeneratorDensityTest, HandValues) {
  EXPECT_NEAR(Generator(ExampleModel{2, 3.0}).density(0.0), 0.5, 1e-15);
  EXPECT_NEAR(Generator(ExampleModel{5, 1.0}).density(0.4), 2.0, 1e-14);
  EXPECT_NEAR(Generator(ExampleModel{5, 1.0}).density(0.2), 0.0, 1e-15);
  EXPECT_EQ(Generator(ExampleModel{5, 1.0}).density(1.5), 0.0);
  const Generator ex1(ExampleModel{1, 0.6});
  for (double x : {-0.9, -0.3, -0.1, 0.0, 0.2, 0.55, 0.7}) EXPECT_NEAR(ex1.density(x), example1(0.6, x), 1e-15);
  EXPECT_NEAR(ex1.density(-0.3), 0.0, 1e-15);
  EXPECT_NEAR(Generator(parse_generator("normal(1,2)")).density(1.0), 1.0 / (2.0 * std::sqrt(2.0 * pi)), 1e-15);
  EXPECT_THROW(Generator(parse_generator("stable(1.5,0,1,0)")).density(0.0), DomainError);
  EXPECT_FALSE(Generator(parse_generator("mvnormal(2)")).has_density());
}

TEST(GeneratorDensityTest, IntegrateToOne) {
  const std::vector<std::tuple<std::string, double, double>> cases = {
      {"normal(0,1)", -12, 12},       {"logistic(0,1)", -40, 40},        {"gamma(2,2)", 0, 120},
      {"pareto(3,1,0)", 1e-12, 3000},     {"t(7)", -300, 300},               {"lognormal(0,1)", 0, 2000},
      {"example(1,0.7)", -1, 1},      {"example(2,2.5)", -1, 1},         {"example(3,0.8)", 0, 2000},
      {"example(4,1.7)", 0, 1},       {"example(5,0.5)", 0, 1},          {"example(5,1.8,clipped)", 0, 1},
      {"smoothalt(trig;0.8,0.3)", 0, 1}, {"smoothalt(legendre;0.5,-0.4,0.2)", 0, 1},
  };
  for (const auto& [label, lo, hi] : cases) {
    const Generator g(parse_generator(label));
    const NumericCdf cdf([&](double x) { return g.density(x); }, lo, hi, 200000);
    EXPECT_NEAR(cdf.mass(), 1.0, 2e-4) << label;
  }
}

TEST(GeneratorDensityTest, MatchesIndependentFormulas) {
  const Generator t7(parse_generator("t(7)"));
  const double c7 = std::tgamma(4.0) / (std::sqrt(7.0 * pi) * std::tgamma(3.5));
  for (double x : {-3.0, 0.0, 1.2}) EXPECT_NEAR(t7.density(x), c7 * std::pow(1.0 + x * x / 7.0, -4.0), 1e-14);
  const Generator gamma(parse_generator("gamma(2,2)"));
  EXPECT_NEAR(gamma.density(3.0), 3.0 * std::exp(-1.5) / 4.0, 1e-15);
  const Generator pareto(parse_generator("pareto(3,1,0)"));
  EXPECT_NEAR(pareto.density(0.5), 3.0 / std::pow(1.5, 4.0), 1e-14);
  const Generator ex3(ExampleModel{3, 0.5});
  for (double x : {0.3, 1.0, 2.7}) {
    EXPECT_NEAR(ex3.density(x), normal_pdf(std::log(x)) / x * (1.0 + 0.5 * std::sin(2.0 * pi * std::log(x))), 1e-14);
  }
  const NumericCdf z([](double x) { return std::exp(1.3 * std::sin(5.0 * pi * x)); }, 0.0, 1.0);
  const Generator ex4(ExampleModel{4, 1.3});
  EXPECT_NEAR(ex4.density(0.1), std::exp(1.3) / z.mass(), 1e-9);
}

struct CdfCase {
  std::string label;
  Density cdf;
};

TEST(GeneratorSamplingTest, UnivariateDrawsFollowTheirLaws) {
  const auto t_cdf = [](double nu) {
    const double c = std::tgamma((nu + 1.0) / 2.0) / (std::sqrt(nu * pi) * std::tgamma(nu / 2.0));
    auto table = std::make_shared<NumericCdf>(
        [=](double x) { return c * std::pow(1.0 + x * x / nu, -(nu + 1.0) / 2.0); }, -400.0, 400.0, 400000);
    return Density([table](double x) { return (*table)(x); });
  };
  const auto from_density = [](Density f, double lo, double hi) {
    auto table = std::make_shared<NumericCdf>(std::move(f), lo, hi, 200000);
    return Density([table](double x) { return (*table)(x); });
  };
  const std::vector<CdfCase> cases = {
      {"uniform(-1,2)", [](double x) { return std::clamp((x + 1.0) / 3.0, 0.0, 1.0); }},
      {"normal(1,2)", [](double x) { return oracle::normal_cdf((x - 1.0) / 2.0); }},
      {"logistic(0.5,2)", [](double x) { return 1.0 / (1.0 + std::exp(-(x - 0.5) / 2.0)); }},
      {"gamma(2,2)", [](double x) { return x <= 0 ? 0.0 : oracle::gamma_p(2.0, x / 2.0); }},
      {"gamma(0.5,1)", [](double x) { return x <= 0 ? 0.0 : oracle::gamma_p(0.5, x); }},
      {"pareto(3,1,0)", [](double x) { return x <= 0 ? 0.0 : 1.0 - std::pow(1.0 / (x + 1.0), 3.0); }},
      {"lognormal(0.2,0.5)", [](double x) { return x <= 0 ? 0.0 : oracle::normal_cdf((std::log(x) - 0.2) / 0.5); }},
      {"stable(2,0,1,0)", [](double x) { return oracle::normal_cdf(x / std::sqrt(2.0)); }},
      {"stable(1,0,2,1)", [](double x) { return 0.5 + std::atan((x - 1.0) / 2.0) / pi; }},
      {"stable(0.5,1,1,0)", [](double x) {  // Levy: 2 (1 - Phi(1 / sqrt(x)))
         return x <= 0 ? 0.0 : 2.0 * (1.0 - oracle::normal_cdf(1.0 / std::sqrt(x)));
       }},
      {"t(7)", t_cdf(7.0)},
      {"t(2.5)", t_cdf(2.5)},
      {"example(1,0.7)", from_density([](double x) { return example1(0.7, x); }, -1, 1)},
      {"example(1,0)", [](double x) { return std::clamp((x + 1.0) / 2.0, 0.0, 1.0); }},
      {"example(2,2.5)", from_density([](double x) { return (1.0 + std::sin(5.0 * pi * x)) / 2.0; }, -1, 1)},
      {"example(3,-0.6)", from_density([](double x) {
         return x <= 0 ? 0.0 : normal_pdf(std::log(x)) / x * (1.0 - 0.6 * std::sin(2.0 * pi * std::log(x)));
       }, 0, 2000)},
      {"example(4,1.7)", from_density([](double x) { return std::exp(1.7 * std::sin(5.0 * pi * x)); }, 0, 1)},
      {"example(5,0.9)", from_density([](double x) { return 1.0 + 0.9 * std::cos(5.0 * pi * x); }, 0, 1)},
      {"example(5,2,clipped)",
       from_density([](double x) { return std::max(0.0, 1.0 + 2.0 * std::cos(5.0 * pi * x)); }, 0, 1)},
      {"smoothalt(trig;0.8)", from_density([](double z) {
         return std::exp(0.8 * std::sqrt(2.0) * std::cos(pi * z));
       }, 0, 1)},
      {"smoothalt(legendre;0,0.6)", from_density([](double z) {
         const double u = 2.0 * z - 1.0;
         return std::exp(0.6 * std::sqrt(5.0) * (1.5 * u * u - 0.5));
       }, 0, 1)},
  };
  std::uint64_t seed = 100;
  for (const auto& c : cases) {
    EXPECT_LT(oracle::kolmogorov_distance(draws(c.label, seed++), c.cdf), 0.01) << c.label;
  }
}

TEST(GeneratorSamplingTest, DeterministicPerStream) {
  EXPECT_EQ(draws("example(3,0.4)", 7, 100), draws("example(3,0.4)", 7, 100));
  EXPECT_NE(draws("example(3,0.4)", 7, 100), draws("example(3,0.4)", 8, 100));
  EXPECT_GT(Generator(ExampleModel{4, 2.0}).acceptance_probability(), 0.0);
  EXPECT_EQ(Generator(parse_generator("normal(0,1)")).acceptance_probability(), 1.0);
}

std::vector<double> covariance(const MultiSample& s) {
  const std::size_t p = s.dim(), n = s.size();
  std::vector<double> mean(p, 0.0), cov(p * p, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < p; ++a) mean[a] += s.row(i)[a] / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b)
        cov[a * p + b] += (s.row(i)[a] - mean[a]) * (s.row(i)[b] - mean[b]) / static_cast<double>(n - 1);
  return cov;
}

TEST(GeneratorSamplingTest, MultivariateCovariances) {
  RngStream s(200);
  const MultiSample ar1 = Generator(parse_generator("mvnormal(3,ar1:0.5)")).sample(kDraws, s);
  const auto c = covariance(ar1);
  const double expected[9] = {1, 0.5, 0.25, 0.5, 1, 0.5, 0.25, 0.5, 1};
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(c[i], expected[i], 0.02) << i;

  const MultiSample t = Generator(parse_generator("mvt(2,8)")).sample(kDraws, s);
  const auto ct = covariance(t);
  EXPECT_NEAR(ct[0], 8.0 / 6.0, 0.05);
  EXPECT_NEAR(ct[1], 0.0, 0.03);
  const auto first = t.column(0);
  const NumericCdf t8([](double v) { return std::pow(1.0 + v * v / 8.0, -4.5); }, -200, 200, 100000);
  EXPECT_LT(oracle::kolmogorov_distance({first.values().begin(), first.values().end()}, [&](double x) { return t8(x); }),
            0.01);
}

TEST(GeneratorSamplingTest, ExampleVectors) {
  RngStream s(201);
  const MultiSample six = Generator(ExampleModel{6, 0.5}).sample(2000, s);
  ASSERT_EQ(six.dim(), 3u);
  for (std::size_t i = 0; i < six.size(); ++i) {
    EXPECT_DOUBLE_EQ(six.row(i)[2], 0.3 * six.row(i)[0] + 0.7 * six.row(i)[1]);
  }
  const auto col = Generator(ExampleModel{7, 1.0}).sample(kDraws, s).column(1);
  const NumericCdf ex4([](double x) { return std::exp(std::sin(5.0 * pi * x)); }, 0, 1);
  EXPECT_LT(oracle::kolmogorov_distance({col.values().begin(), col.values().end()}, [&](double x) { return ex4(x); }),
            0.01);

  const MultiSample eight = Generator(ExampleModel{8, 0.3}).sample(kDraws, s);
  ASSERT_EQ(eight.dim(), 5u);
  const auto c = covariance(eight);
  EXPECT_NEAR(c[0], 1.0, 0.02);
  EXPECT_NEAR(c[1], 2.0 * std::sqrt(0.21), 0.02);
  EXPECT_NEAR(c[2 * 5 + 2], 1.0, 0.02);
  EXPECT_NEAR(c[2 * 5 + 3], 0.0, 0.02);
  const MultiSample nine = Generator(ExampleModel{9, 0.0}).sample(kDraws, s);
  EXPECT_NEAR(covariance(nine)[0], 2.0, 0.1);  // t_4 variance
}

}  // namespace
}  // namespace smoothtest

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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "smoothtest/basis.hpp"
#include "smoothtest/empirical.hpp"
#include "smoothtest/rng.hpp"

namespace smoothtest {

enum class NullFamily { Uniform, Normal, Logistic, Gamma, Pareto, Stable, StudentT, LogNormal };

// Parameter conventions:
//   uniform(a, b), normal(mean, sd), logistic(location, scale),
//   gamma(shape, scale), pareto(shape, scale, location) with CDF
//   1 - (scale / (x - location + scale))^shape on x > location,
//   stable(alpha, beta, scale, location) in the Chambers-Mallows-Stuck
//   parameterization, t(dof), lognormal(meanlog, sdlog).
struct NullModel {
  NullFamily family = NullFamily::Normal;
  std::vector<double> params;
};

// Alternative families indexed by one parameter:
//   1  g(x) = 1/2 + 2x (mu - |x|) / mu^2 on |x| < mu, uniform(-1, 1) elsewhere; mu in [0, 1]
//   2  g(x) = (1 + sin(2 pi sigma x)) / 2 on (-1, 1); sigma in [0.5, 5]
//   3  lognormal density times 1 + a sin(2 pi log x); a in [-1, 1]
//   4  exp(c sin(5 pi x)) / Z(c) on (0, 1); c in [0, 2]
//   5  1 + c cos(5 pi x) on (0, 1); c in [0, 1], or (0, 2] clipped at zero
//      and renormalized when allow_clipped is set
//   6  (Y1, Y2, 0.3 Y1 + 0.7 Y2) with Y1, Y2 iid from family 1
//   7  (Y1, Y2, 0.3 Y1 + 0.7 Y2) with Y1, Y2 iid from family 4
//   8  A Z with Z ~ N(0, I_5), A = diag(A0, I_3), A0 = [[sqrt(1-delta), sqrt(delta)],
//      [sqrt(delta), sqrt(1-delta)]]; delta in [0, 0.5]
//   9  as 8 with Z ~ t_4(0, I_5)
struct ExampleModel {
  int id = 1;
  double param = 0.0;
  bool allow_clipped = false;
};

// rho_theta(z) = C(theta) exp(sum_k theta_k psi_k(z)) on [0, 1].
struct SmoothAltModel {
  BasisKind kind = BasisKind::Trigonometric;
  std::vector<double> theta;
};

enum class Covariance { Identity, Ar1 };

// N_p(0, Sigma) when dof == 0, otherwise multivariate t_dof(0, Sigma).
// Sigma is I_p or AR(1) with Sigma_ij = rho^|i-j|.
struct MvModel {
  std::size_t dim = 3;
  double dof = 0.0;
  Covariance covariance = Covariance::Identity;
  double rho = 0.5;
};

using GeneratorSpec = std::variant<NullModel, ExampleModel, SmoothAltModel, MvModel>;

// Text form used in configuration files and reports, e.g. "gamma(2,2)",
// "t(7)", "example(4,1)", "smoothalt(legendre;0.8,0,0)", "mvnormal(3)",
// "mvnormal(3,ar1:0.5)", "mvt(3,4)", "mvt(5,4,identity)".
GeneratorSpec parse_generator(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

// Distribution of the first sample in example `id` (the family at its null
// parameter, or uniform(-1, 1) for example 2).
GeneratorSpec example_baseline(int id);
std::pair<double, double> example_param_range(int id);

class Generator {
 public:
  // Validates parameters and precomputes normalizers, envelopes, and
  // Cholesky factors. Throws DomainError for invalid parameters.
  explicit Generator(GeneratorSpec spec);

  const GeneratorSpec& spec() const noexcept { return spec_; }
  std::size_t dim() const noexcept { return dim_; }

  MultiSample sample(std::size_t n, RngStream& stream) const;
  UniSample sample_univariate(std::size_t n, RngStream& stream) const;

  // Univariate density; throws DomainError when no closed form is available
  // (stable laws, multivariate specs).
  double density(double x) const;
  bool has_density() const noexcept;
  // Support endpoints (possibly infinite).
  std::pair<double, double> support() const;

  // Expected acceptance probability of the rejection sampler (1 when the
  // sampler is exact).
  double acceptance_probability() const noexcept { return acceptance_; }

  // Interpretations this spec relies on, for report metadata.
  std::vector<std::string> notes() const;

 private:
  double draw(RngStream& stream) const;
  void draw_row(RngStream& stream, double* out) const;
  double draw_bounded(RngStream& stream, double lo, double hi) const;
  double unnormalized(double x) const;

  GeneratorSpec spec_;
  std::size_t dim_ = 1;
  double normalizer_ = 1.0;
  double envelope_ = 1.0;
  double acceptance_ = 1.0;
  std::vector<double> cholesky_;
};

}  // namespace smoothtest

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
#include <span>
#include <utility>
#include <vector>

#include "smoothtest/basis.hpp"
#include "smoothtest/empirical.hpp"
#include "smoothtest/numerics.hpp"
#include "smoothtest/report.hpp"
#include "smoothtest/rng.hpp"
#include "smoothtest/sphere_search.hpp"

namespace smoothtest {

inline constexpr int kDefaultMultivariateTruncation = 4;

// u -> Psi_u(d) = max_k |(1/m) sum_j psi_k(F^u_n(u . Y_j))| for fixed samples.
// Holds scratch buffers: one instance per thread.
class DirectionalObjective {
 public:
  DirectionalObjective(const MultiSample& x, const MultiSample& y, const BasisSystem& basis);
  double operator()(std::span<const double> u);

 private:
  const MultiSample& x_;
  const MultiSample& y_;
  RankTable table_;
  std::vector<double> x_projection_;
  std::vector<double> y_projection_;
  std::vector<double> sums_;
};

// u -> max_k |n^{-1/2} sum_i e_i psi_k(F^u_n(u . X_i))|.
class MultiplierObjective {
 public:
  MultiplierObjective(const MultiSample& x, std::span<const double> multipliers, const BasisSystem& basis);
  double operator()(std::span<const double> u);

 private:
  const MultiSample& x_;
  std::vector<double> multipliers_;
  RankTable table_;
  std::vector<double> projection_;
  std::vector<std::pair<double, double>> keyed_;
  std::vector<double> sums_;
};

// Unscaled Psi_u(d) with x as the reference sample.
double directional_statistic(const MultiSample& x, const MultiSample& y, const Direction& dir,
                             const BasisSystem& basis);

struct MaxStatistic {
  // sqrt(nm/(n+m)) sup_u Psi_u(d).
  double value = 0.0;
  SphereSearchResult search;
  bool swapped = false;
};

// Projection-pursuit statistic. The larger sample is the reference; p = 1
// evaluates the univariate smooth statistic (u = +1). For p = 2 with at most
// 4096 sample pairs the search also visits every arc on which the objective
// is constant, so the result is the exact supremum over open arcs.
MaxStatistic max_statistic(const MultiSample& x, const MultiSample& y, const BasisSystem& basis,
                           const OptimConfig& cfg, const RngStream& stream);

// sup over (u, k) of the multiplier objective; multipliers.size() == x.size().
double multiplier_statistic(const MultiSample& x, std::span<const double> multipliers, const BasisSystem& basis,
                            const OptimConfig& cfg, const RngStream& stream);

struct BootstrapResult {
  double critical_value = 0.0;
  // Sorted ascending.
  std::vector<double> replicate_values;
  std::size_t replicates = 0;
  double alpha = 0.05;
};

// Multiplier-bootstrap (1 - alpha)-quantile conditional on x: the
// ceil((1 - alpha) B)-th order statistic of B replicate suprema, each with
// gaussian multipliers from stream.child(b). Requires B >= 20.
BootstrapResult bootstrap_critical_value(const MultiSample& x, const BasisSystem& basis, double alpha,
                                         std::size_t replicates, const OptimConfig& cfg,
                                         const RngStream& stream);

struct MsConfig {
  OptimConfig search{};
  // Smaller per-replicate budget for the bootstrap suprema.
  OptimConfig bootstrap_search{.restarts = 5};
  std::size_t bootstrap_replicates = 500;
};

// Multivariate smooth test: reject iff max_statistic >= bootstrap critical value.
TestReport ms_test(const MultiSample& x, const MultiSample& y, const BasisSystem& basis, double alpha,
                   const MsConfig& cfg, const RngStream& stream);

// nm/(n+m) times the average over `directions` of integral (F^u_n - G^u_m)^2 dt.
double bf_statistic(const MultiSample& x, const MultiSample& y, std::span<const Direction> directions);
// Same with M uniform directions drawn from stream; p = 1 uses u = +1 only.
double bf_statistic(const MultiSample& x, const MultiSample& y, std::size_t directions, RngStream& stream);

// Baringhaus-Franz type test calibrated by row permutations with a fixed
// direction set.
TestReport bf_test(const MultiSample& x, const MultiSample& y, std::size_t directions, double alpha,
                   std::size_t permutations, const RngStream& stream);

}  // namespace smoothtest

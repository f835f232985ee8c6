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
#include <functional>
#include <vector>

#include "smoothtest/basis.hpp"
#include "smoothtest/empirical.hpp"
#include "smoothtest/report.hpp"
#include "smoothtest/rng.hpp"

namespace smoothtest {

inline constexpr int kDefaultTruncation = 10;
inline constexpr int kDefaultBgxTruncation = 4;
inline constexpr int kDefaultMaxTruncation = 20;
inline constexpr std::size_t kDefaultPermutations = 999;

// Basis means psi_hat_k = (1/m) sum_j psi_k(F_n(Y_j)), k = 1..d, with the
// larger sample used as the reference EDF. `swapped` reports whether y served
// as the reference.
std::vector<double> smooth_coefficients(const UniSample& x, const UniSample& y,
                                        const BasisSystem& basis, bool* swapped = nullptr);

// sqrt(nm/(n+m)) max_k |psi_hat_k|.
double smooth_statistic(const UniSample& x, const UniSample& y, const BasisSystem& basis);

// P(|G|_inf <= t) = (2 Phi(t) - 1)^d for G ~ N(0, I_d); t >= 0.
double max_abs_gaussian_cdf(double t, int d);

// (1 - alpha)-quantile of |G|_inf: Phi^{-1}(1/2 + (1 - alpha)^{1/d} / 2).
double smooth_critical_value(double alpha, int d);

// Smooth test: reject iff smooth_statistic >= smooth_critical_value.
TestReport smooth_test(const UniSample& x, const UniSample& y, const BasisSystem& basis, double alpha);

// sqrt(nm/(n+m)) sup_t |F_n(t) - G_m(t)|, evaluated at the pooled points.
double ks_statistic(const UniSample& x, const UniSample& y);

// nm/(n+m) integral (F_n - G_m)^2 dH_{n,m}, as a finite sum over the pooled
// points weighted by their multiplicity.
double cvm_statistic(const UniSample& x, const UniSample& y);

// integral (F_n(t) - G_m(t))^2 dt, exact: the integrand is a step function
// vanishing outside the pooled range.
double edf_l2_distance(const UniSample& x, const UniSample& y);

using TwoSampleStatistic = std::function<double(const UniSample&, const UniSample&)>;

// Monte Carlo permutation p-value (1 + #{T* >= T}) / (B + 1); each
// permutation draws m of the pooled n + m values without replacement as the
// new second sample.
double permutation_pvalue(const TwoSampleStatistic& statistic, const UniSample& x, const UniSample& y,
                          std::size_t permutations, RngStream& stream);

// Same formula with the B permutations replaced by all C(n+m, m) splits.
double exhaustive_permutation_pvalue(const TwoSampleStatistic& statistic, const UniSample& x,
                                     const UniSample& y);

TestReport ks_test(const UniSample& x, const UniSample& y, double alpha, std::size_t permutations,
                   RngStream& stream);
TestReport cvm_test(const UniSample& x, const UniSample& y, double alpha, std::size_t permutations,
                    RngStream& stream);

// Quadratic smooth statistic nm/(n+m) sum_k psi_hat_k^2.
double bgx_statistic(const UniSample& x, const UniSample& y, const BasisSystem& basis);

// Reject iff bgx_statistic >= chi2_quantile(1 - alpha, d).
TestReport bgx_test(const UniSample& x, const UniSample& y, const BasisSystem& basis, double alpha);

// argmax_{1 <= d <= d_max} { T(d) - d log(n + m) } with T the quadratic
// statistic on the first d functions; ties go to the smaller d.
int select_d_schwarz(const UniSample& x, const UniSample& y, BasisKind kind, int d_max);

}  // namespace smoothtest

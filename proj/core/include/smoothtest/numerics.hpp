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

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "smoothtest/errors.hpp"

namespace smoothtest {

// Standard normal distribution function, accurate to ~1 ulp over the real line.
double normal_cdf(double x);
double normal_pdf(double x);

// Inverse of normal_cdf; throws DomainError unless 0 < p < 1.
double normal_quantile(double p);

// Regularized lower incomplete gamma P(k/2, x/2), i.e. the chi-square CDF.
double chi2_cdf(double x, int k);

// Inverse of chi2_cdf in x for fixed k >= 1; throws DomainError unless 0 < p < 1.
double chi2_quantile(double p, int k);

struct OptimConfig {
  int restarts = 10;
  int max_iterations = 500;
  double simplex_tolerance = 1e-6;
  // Edge length of the initial simplex (radians when searching angles).
  double initial_step = 0.5;

  void validate() const;
};

struct OptimResult {
  std::vector<double> argmax;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

// Derivative-free simplex search that maximizes `objective` starting from
// `start`. Coefficients: reflection 1, expansion 2, contraction 0.5, shrink
// 0.5. Stops once the spread of vertex values drops below
// cfg.simplex_tolerance or after cfg.max_iterations iterations. Throws
// DomainError if the objective returns a non-finite value.
OptimResult nelder_mead(const Objective& objective, std::span<const double> start,
                        const OptimConfig& cfg);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule with `order` nodes mapped onto [a, b].
QuadratureRule gauss_legendre(int order, double a = 0.0, double b = 1.0);

// Adaptive Gauss-Kronrod integral of f over [a, b] to relative tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

// Shortest decimal text that reads back to the same double.
std::string format_real(double value);

}  // namespace smoothtest

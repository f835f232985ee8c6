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

#include "smoothtest/numerics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace smoothtest {

double normal_cdf(double x) {
  if (std::isnan(x)) throw DomainError("normal_cdf: argument is NaN");
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("normal_quantile: p must lie in (0, 1), got " + std::to_string(p));
  }
  // erfc_inv keeps full relative precision in both tails.
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double chi2_cdf(double x, int k) {
  if (k < 1) throw DomainError("chi2_cdf: degrees of freedom must be >= 1");
  if (x <= 0.0) return 0.0;
  return boost::math::gamma_p(0.5 * k, 0.5 * x);
}

double chi2_quantile(double p, int k) {
  if (k < 1) throw DomainError("chi2_quantile: degrees of freedom must be >= 1");
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("chi2_quantile: p must lie in (0, 1), got " + std::to_string(p));
  }
  return 2.0 * boost::math::gamma_p_inv(0.5 * k, p);
}

void OptimConfig::validate() const {
  if (restarts < 1) throw DomainError("optimizer restarts must be >= 1");
  if (max_iterations < 1) throw DomainError("optimizer max_iterations must be >= 1");
  if (!(simplex_tolerance > 0.0)) throw DomainError("simplex_tolerance must be > 0");
  if (!(initial_step > 0.0)) throw DomainError("initial_step must be > 0");
}

OptimResult nelder_mead(const Objective& objective, std::span<const double> start,
                        const OptimConfig& cfg) {
  cfg.validate();
  const std::size_t dim = start.size();
  if (dim == 0) throw DomainError("nelder_mead: start point must have dimension >= 1");

  OptimResult result;
  // Minimize the negated objective on the standard simplex.
  auto cost = [&](std::span<const double> point) {
    const double value = objective(point);
    ++result.evaluations;
    if (!std::isfinite(value)) throw DomainError("nelder_mead: objective returned a non-finite value");
    return -value;
  };

  std::vector<std::vector<double>> simplex(dim + 1, std::vector<double>(start.begin(), start.end()));
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += cfg.initial_step;
  std::vector<double> costs(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) costs[i] = cost(simplex[i]);

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), reflected(dim), expanded(dim), contracted(dim);

  auto along = [&](double coefficient, const std::vector<double>& worst, std::vector<double>& out) {
    for (std::size_t i = 0; i < dim; ++i) out[i] = centroid[i] + coefficient * (worst[i] - centroid[i]);
  };

  for (result.iterations = 0; result.iterations < cfg.max_iterations; ++result.iterations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Stable sort keeps the earliest vertex first among equal costs.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return costs[a] < costs[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[dim - 1];
    if (costs[worst] - costs[best] < cfg.simplex_tolerance) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v <= dim; ++v) {
      if (v == worst) continue;
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v][i];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    along(-1.0, simplex[worst], reflected);
    const double reflected_cost = cost(reflected);
    if (reflected_cost < costs[best]) {
      along(-2.0, simplex[worst], expanded);
      const double expanded_cost = cost(expanded);
      if (expanded_cost < reflected_cost) {
        simplex[worst] = expanded;
        costs[worst] = expanded_cost;
      } else {
        simplex[worst] = reflected;
        costs[worst] = reflected_cost;
      }
      continue;
    }
    if (reflected_cost < costs[second_worst]) {
      simplex[worst] = reflected;
      costs[worst] = reflected_cost;
      continue;
    }
    // Outside contraction when the reflection improved on the worst vertex,
    // inside contraction otherwise.
    const bool outside = reflected_cost < costs[worst];
    along(outside ? -0.5 : 0.5, simplex[worst], contracted);
    const double contracted_cost = cost(contracted);
    if (contracted_cost < (outside ? reflected_cost : costs[worst])) {
      simplex[worst] = contracted;
      costs[worst] = contracted_cost;
      continue;
    }
    for (std::size_t v = 0; v <= dim; ++v) {
      if (v == best) continue;
      for (std::size_t i = 0; i < dim; ++i) {
        simplex[v][i] = simplex[best][i] + 0.5 * (simplex[v][i] - simplex[best][i]);
      }
      costs[v] = cost(simplex[v]);
    }
  }

  const auto best_it = std::min_element(costs.begin(), costs.end());
  const auto best = static_cast<std::size_t>(best_it - costs.begin());
  result.argmax = simplex[best];
  result.value = -*best_it;
  return result;
}

QuadratureRule gauss_legendre(int order, double a, double b) {
  if (order < 1) throw DomainError("gauss_legendre: order must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const int pairs = (order + 1) / 2;
  for (int i = 0; i < pairs; ++i) {
    // Tricomi's initial guess, then Newton on P_order.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 1; k < order; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      derivative = order * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double weight = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.nodes[i] = mid - half * x;
    rule.nodes[order - 1 - i] = mid + half * x;
    rule.weights[i] = half * weight;
    rule.weights[order - 1 - i] = half * weight;
  }
  return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 20, tol, &error);
}

std::string format_real(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

}  // namespace smoothtest

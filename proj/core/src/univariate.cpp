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

#include "smoothtest/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smoothtest/numerics.hpp"

namespace smoothtest {
namespace {

double size_scale(std::size_t n, std::size_t m) {
  return static_cast<double>(n) * static_cast<double>(m) / static_cast<double>(n + m);
}

void add_sample_notes(TestReport& report, const UniSample& x, const UniSample& y) {
  if (x.has_ties() || y.has_ties()) {
    report.notes.push_back("ties detected: EDFs use the <= convention without randomization");
  }
}

void add_truncation_note(TestReport& report, int d, std::size_t n, std::size_t m) {
  if (static_cast<std::size_t>(d) > std::min(n, m)) {
    report.notes.push_back("d = " + std::to_string(d) + " exceeds min(n, m) = " + std::to_string(std::min(n, m)));
  }
}

// Walks the pooled order statistics and calls visit(t, F_n(t), G_m(t), multiplicity)
// once per distinct pooled value t.
template <typename Visit>
void walk_pooled(const UniSample& x, const UniSample& y, Visit&& visit) {
  const auto xs = x.sorted();
  const auto ys = y.sorted();
  const auto n = static_cast<double>(xs.size());
  const auto m = static_cast<double>(ys.size());
  std::size_t i = 0, j = 0;
  while (i < xs.size() || j < ys.size()) {
    double t;
    if (j == ys.size() || (i < xs.size() && xs[i] <= ys[j])) {
      t = xs[i];
    } else {
      t = ys[j];
    }
    const std::size_t i0 = i, j0 = j;
    while (i < xs.size() && xs[i] == t) ++i;
    while (j < ys.size() && ys[j] == t) ++j;
    visit(t, static_cast<double>(i) / n, static_cast<double>(j) / m, (i - i0) + (j - j0));
  }
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
}

TestReport permutation_test(const char* method, const TwoSampleStatistic& statistic, const UniSample& x,
                            const UniSample& y, double alpha, std::size_t permutations, RngStream& stream) {
  check_alpha(alpha);
  TestReport report;
  report.method = method;
  report.alpha = alpha;
  report.n = x.size();
  report.m = y.size();
  report.seed = stream.seed();
  report.resamples = permutations;
  report.statistic = statistic(x, y);
  report.p_value = permutation_pvalue(statistic, x, y, permutations, stream);
  report.reject = *report.p_value <= alpha;
  add_sample_notes(report, x, y);
  return report;
}

}  // namespace

std::vector<double> smooth_coefficients(const UniSample& x, const UniSample& y, const BasisSystem& basis,
                                        bool* swapped) {
  const bool swap = y.size() > x.size();
  if (swapped != nullptr) *swapped = swap;
  const UniSample& reference = swap ? y : x;
  const UniSample& other = swap ? x : y;

  const RankTable table(basis, reference.size());
  const auto d = static_cast<std::size_t>(basis.size());
  std::vector<double> sums(d, 0.0);
  for (double v : other.values()) {
    const auto row = table.row(reference.count_at_most(v));
    for (std::size_t k = 0; k < d; ++k) sums[k] += row[k];
  }
  const auto m = static_cast<double>(other.size());
  for (double& s : sums) s /= m;
  return sums;
}

double smooth_statistic(const UniSample& x, const UniSample& y, const BasisSystem& basis) {
  const auto coefficients = smooth_coefficients(x, y, basis);
  double largest = 0.0;
  for (double c : coefficients) largest = std::max(largest, std::abs(c));
  return std::sqrt(size_scale(x.size(), y.size())) * largest;
}

double max_abs_gaussian_cdf(double t, int d) {
  if (!(t >= 0.0)) throw DomainError("max_abs_gaussian_cdf: t must be >= 0");
  if (d < 1) throw DomainError("d must be >= 1");
  // 2 Phi(t) - 1 = erf(t / sqrt 2), which avoids cancellation for small t.
  return std::pow(std::erf(t / std::sqrt(2.0)), d);
}

double smooth_critical_value(double alpha, int d) {
  check_alpha(alpha);
  if (d < 1) throw DomainError("d must be >= 1");
  return normal_quantile(0.5 + 0.5 * std::pow(1.0 - alpha, 1.0 / d));
}

TestReport smooth_test(const UniSample& x, const UniSample& y, const BasisSystem& basis, double alpha) {
  TestReport report;
  report.method = "smooth";
  report.alpha = alpha;
  report.d = basis.size();
  report.basis = basis.kind();
  report.n = x.size();
  report.m = y.size();
  report.swapped = y.size() > x.size();
  report.critical_value = smooth_critical_value(alpha, basis.size());
  report.statistic = smooth_statistic(x, y, basis);
  report.reject = report.statistic >= *report.critical_value;
  add_truncation_note(report, basis.size(), x.size(), y.size());
  add_sample_notes(report, x, y);
  return report;
}

double ks_statistic(const UniSample& x, const UniSample& y) {
  double largest = 0.0;
  walk_pooled(x, y, [&](double, double f, double g, std::size_t) { largest = std::max(largest, std::abs(f - g)); });
  return std::sqrt(size_scale(x.size(), y.size())) * largest;
}

double cvm_statistic(const UniSample& x, const UniSample& y) {
  const auto total = static_cast<double>(x.size() + y.size());
  double sum = 0.0;
  walk_pooled(x, y, [&](double, double f, double g, std::size_t multiplicity) {
    const double diff = f - g;
    sum += diff * diff * (static_cast<double>(multiplicity) / total);
  });
  return size_scale(x.size(), y.size()) * sum;
}

double edf_l2_distance(const UniSample& x, const UniSample& y) {
  double sum = 0.0;
  double previous_t = 0.0, previous_diff = 0.0;
  bool started = false;
  walk_pooled(x, y, [&](double t, double f, double g, std::size_t) {
    if (started) sum += previous_diff * previous_diff * (t - previous_t);
    started = true;
    previous_t = t;
    previous_diff = f - g;
  });
  return sum;
}

double permutation_pvalue(const TwoSampleStatistic& statistic, const UniSample& x, const UniSample& y,
                          std::size_t permutations, RngStream& stream) {
  if (permutations < 1) throw DomainError("permutation count must be >= 1");
  const double observed = statistic(x, y);
  std::vector<double> pooled(x.values().begin(), x.values().end());
  pooled.insert(pooled.end(), y.values().begin(), y.values().end());
  const std::size_t total = pooled.size();
  const std::size_t m = y.size();

  std::size_t at_least = 0;
  std::vector<double> work(total);
  for (std::size_t b = 0; b < permutations; ++b) {
    work = pooled;
    for (std::size_t t = 0; t < m; ++t) {
      std::swap(work[t], work[t + stream.uniform_index(total - t)]);
    }
    const UniSample new_y(std::vector<double>(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(m)));
    const UniSample new_x(std::vector<double>(work.begin() + static_cast<std::ptrdiff_t>(m), work.end()));
    if (statistic(new_x, new_y) >= observed) ++at_least;
  }
  return static_cast<double>(1 + at_least) / static_cast<double>(permutations + 1);
}

double exhaustive_permutation_pvalue(const TwoSampleStatistic& statistic, const UniSample& x,
                                     const UniSample& y) {
  const double observed = statistic(x, y);
  std::vector<double> pooled(x.values().begin(), x.values().end());
  pooled.insert(pooled.end(), y.values().begin(), y.values().end());
  const std::size_t total = pooled.size();
  const std::size_t m = y.size();
  if (total > 24) throw DomainError("exhaustive permutation enumeration is limited to n + m <= 24");

  // in_y marks the second-sample members; prev_permutation visits every split.
  std::vector<bool> in_y(total, false);
  std::fill(in_y.begin(), in_y.begin() + static_cast<std::ptrdiff_t>(m), true);
  std::size_t splits = 0, at_least = 0;
  std::vector<double> new_x, new_y;
  do {
    new_x.clear();
    new_y.clear();
    for (std::size_t i = 0; i < total; ++i) (in_y[i] ? new_y : new_x).push_back(pooled[i]);
    ++splits;
    if (statistic(UniSample(new_x), UniSample(new_y)) >= observed) ++at_least;
  } while (std::prev_permutation(in_y.begin(), in_y.end()));
  return static_cast<double>(1 + at_least) / static_cast<double>(splits + 1);
}

TestReport ks_test(const UniSample& x, const UniSample& y, double alpha, std::size_t permutations,
                   RngStream& stream) {
  return permutation_test("ks", ks_statistic, x, y, alpha, permutations, stream);
}

TestReport cvm_test(const UniSample& x, const UniSample& y, double alpha, std::size_t permutations,
                    RngStream& stream) {
  return permutation_test("cvm", cvm_statistic, x, y, alpha, permutations, stream);
}

double bgx_statistic(const UniSample& x, const UniSample& y, const BasisSystem& basis) {
  double sum = 0.0;
  for (double c : smooth_coefficients(x, y, basis)) sum += c * c;
  return size_scale(x.size(), y.size()) * sum;
}

TestReport bgx_test(const UniSample& x, const UniSample& y, const BasisSystem& basis, double alpha) {
  check_alpha(alpha);
  TestReport report;
  report.method = "bgx";
  report.alpha = alpha;
  report.d = basis.size();
  report.basis = basis.kind();
  report.n = x.size();
  report.m = y.size();
  report.swapped = y.size() > x.size();
  report.critical_value = chi2_quantile(1.0 - alpha, basis.size());
  report.statistic = bgx_statistic(x, y, basis);
  report.reject = report.statistic >= *report.critical_value;
  add_truncation_note(report, basis.size(), x.size(), y.size());
  add_sample_notes(report, x, y);
  return report;
}

int select_d_schwarz(const UniSample& x, const UniSample& y, BasisKind kind, int d_max) {
  if (d_max < 1) throw DomainError("D_max must be >= 1");
  const auto coefficients = smooth_coefficients(x, y, BasisSystem(kind, d_max));
  const double scale = size_scale(x.size(), y.size());
  const double penalty = std::log(static_cast<double>(x.size() + y.size()));
  int best_d = 1;
  double best_score = 0.0;
  double quadratic = 0.0;
  for (int d = 1; d <= d_max; ++d) {
    quadratic += coefficients[static_cast<std::size_t>(d - 1)] * coefficients[static_cast<std::size_t>(d - 1)];
    const double score = scale * quadratic - d * penalty;
    if (d == 1 || score > best_score) {
      best_score = score;
      best_d = d;
    }
  }
  return best_d;
}

}  // namespace smoothtest

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

#include "smoothtest/multivariate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "smoothtest/univariate.hpp"

namespace smoothtest {
namespace {

double size_scale(std::size_t n, std::size_t m) {
  return static_cast<double>(n) * static_cast<double>(m) / static_cast<double>(n + m);
}

void check_dims(const MultiSample& x, const MultiSample& y) {
  if (x.dim() != y.dim()) throw DomainError("samples have different dimensions");
}

std::vector<Direction> draw_directions(std::size_t p, std::size_t count, RngStream& stream) {
  if (count < 1) throw DomainError("direction count must be >= 1");
  std::vector<Direction> dirs;
  if (p == 1) {
    dirs.push_back(Direction::axis(1, 0));
    return dirs;
  }
  dirs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) dirs.push_back(Direction::random(p, stream));
  return dirs;
}

// For p = 2 both objectives are constant on the arcs between consecutive
// angles at which two projections swap order: u . (a_i - b_j) = 0 for the
// pairs that matter. One direction per arc then makes the seed set exhaustive.
// Skipped beyond kMaxPlanarPairs pairs, where the arcs outnumber what a search
// can afford to evaluate.
constexpr std::size_t kMaxPlanarPairs = 4096;

std::vector<Direction> planar_arc_midpoints(const MultiSample& a, const MultiSample& b, bool same_sample) {
  std::vector<Direction> out;
  if (a.dim() != 2) return out;
  const std::size_t pairs = same_sample ? a.size() * (a.size() - 1) / 2 : a.size() * b.size();
  if (pairs > kMaxPlanarPairs) return out;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::vector<double> angles;
  angles.reserve(2 * pairs);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = same_sample ? i + 1 : 0; j < b.size(); ++j) {
      const double w0 = a.row(i)[0] - b.row(j)[0], w1 = a.row(i)[1] - b.row(j)[1];
      if (w0 == 0.0 && w1 == 0.0) continue;
      const double normal = std::atan2(w1, w0) + std::numbers::pi / 2.0;
      for (double t : {normal, normal + std::numbers::pi}) angles.push_back(t - kTwoPi * std::floor(t / kTwoPi));
    }
  }
  if (angles.empty()) return out;
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  out.reserve(angles.size());
  for (std::size_t k = 0; k < angles.size(); ++k) {
    const double next = k + 1 < angles.size() ? angles[k + 1] : angles.front() + kTwoPi;
    const double mid = 0.5 * (angles[k] + next);
    const double v[2] = {std::cos(mid), std::sin(mid)};
    out.push_back(Direction::from_vector(v));
  }
  return out;
}

double max_abs(std::span<const double> v) {
  double largest = 0.0;
  for (double s : v) largest = std::max(largest, std::abs(s));
  return largest;
}

}  // namespace

DirectionalObjective::DirectionalObjective(const MultiSample& x, const MultiSample& y, const BasisSystem& basis)
    : x_(x),
      y_(y),
      table_(basis, x.size()),
      x_projection_(x.size()),
      y_projection_(y.size()),
      sums_(static_cast<std::size_t>(basis.size())) {
  check_dims(x, y);
}

double DirectionalObjective::operator()(std::span<const double> u) {
  project_into(x_, u, x_projection_);
  project_into(y_, u, y_projection_);
  std::sort(x_projection_.begin(), x_projection_.end());
  std::fill(sums_.begin(), sums_.end(), 0.0);
  const std::size_t d = sums_.size();
  for (double v : y_projection_) {
    const auto rank = static_cast<std::size_t>(
        std::upper_bound(x_projection_.begin(), x_projection_.end(), v) - x_projection_.begin());
    const auto row = table_.row(rank);
    for (std::size_t k = 0; k < d; ++k) sums_[k] += row[k];
  }
  const auto m = static_cast<double>(y_projection_.size());
  for (double& s : sums_) s /= m;
  return max_abs(sums_);
}

MultiplierObjective::MultiplierObjective(const MultiSample& x, std::span<const double> multipliers,
                                         const BasisSystem& basis)
    : x_(x),
      multipliers_(multipliers.begin(), multipliers.end()),
      table_(basis, x.size()),
      projection_(x.size()),
      keyed_(x.size()),
      sums_(static_cast<std::size_t>(basis.size())) {
  if (multipliers.size() != x.size()) throw DomainError("multiplier count must equal the sample size");
}

double MultiplierObjective::operator()(std::span<const double> u) {
  project_into(x_, u, projection_);
  const std::size_t n = projection_.size();
  for (std::size_t i = 0; i < n; ++i) keyed_[i] = {projection_[i], multipliers_[i]};
  std::sort(keyed_.begin(), keyed_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::fill(sums_.begin(), sums_.end(), 0.0);
  const std::size_t d = sums_.size();
  std::size_t i = 0;
  while (i < n) {
    // Every member of a tied run has F_n equal to the end of the run.
    std::size_t end = i + 1;
    while (end < n && keyed_[end].first == keyed_[i].first) ++end;
    const auto row = table_.row(end);
    for (; i < end; ++i) {
      const double e = keyed_[i].second;
      for (std::size_t k = 0; k < d; ++k) sums_[k] += e * row[k];
    }
  }
  return max_abs(sums_) / std::sqrt(static_cast<double>(n));
}

double directional_statistic(const MultiSample& x, const MultiSample& y, const Direction& dir,
                             const BasisSystem& basis) {
  check_dims(x, y);
  if (dir.dim() != x.dim()) throw DomainError("direction dimension does not match sample dimension");
  DirectionalObjective objective(x, y, basis);
  return objective(dir.unit());
}

MaxStatistic max_statistic(const MultiSample& x, const MultiSample& y, const BasisSystem& basis,
                           const OptimConfig& cfg, const RngStream& stream) {
  check_dims(x, y);
  const bool swapped = y.size() > x.size();
  const MultiSample& reference = swapped ? y : x;
  const MultiSample& other = swapped ? x : y;
  DirectionalObjective objective(reference, other, basis);
  auto search = [&] {
    if (x.dim() > 1) {
      const auto arcs = planar_arc_midpoints(reference, other, false);
      return maximize_on_sphere(std::ref(objective), x.dim(), cfg, stream, arcs);
    }
    const Direction up = Direction::axis(1, 0);
    const double v = objective(up.unit());
    return SphereSearchResult{up, v, {v}, 1};
  }();
  const double value = std::sqrt(size_scale(x.size(), y.size())) * search.best_value;
  return MaxStatistic{value, std::move(search), swapped};
}

double multiplier_statistic(const MultiSample& x, std::span<const double> multipliers, const BasisSystem& basis,
                            const OptimConfig& cfg, const RngStream& stream) {
  MultiplierObjective objective(x, multipliers, basis);
  if (x.dim() == 1) {
    const double up = 1.0;
    return objective(std::span<const double>(&up, 1));
  }
  const auto arcs = planar_arc_midpoints(x, x, true);
  return maximize_on_sphere(std::ref(objective), x.dim(), cfg, stream, arcs).best_value;
}

BootstrapResult bootstrap_critical_value(const MultiSample& x, const BasisSystem& basis, double alpha,
                                         std::size_t replicates, const OptimConfig& cfg,
                                         const RngStream& stream) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  if (replicates < 20) throw DomainError("bootstrap needs B >= 20 replicates");
  BootstrapResult out;
  out.alpha = alpha;
  out.replicates = replicates;
  out.replicate_values.resize(replicates);
  std::vector<double> multipliers(x.size());
  for (std::size_t b = 0; b < replicates; ++b) {
    const RngStream replicate = stream.child(b);
    RngStream multiplier_stream = replicate.child(0);
    for (double& e : multipliers) e = multiplier_stream.gaussian();
    out.replicate_values[b] = multiplier_statistic(x, multipliers, basis, cfg, replicate.child(1));
  }
  std::sort(out.replicate_values.begin(), out.replicate_values.end());
  // ceil((1 - alpha) B), guarding against (1 - alpha) B landing a hair above an integer.
  const double target = (1.0 - alpha) * static_cast<double>(replicates);
  auto rank = static_cast<std::size_t>(std::ceil(target - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, replicates);
  out.critical_value = out.replicate_values[rank - 1];
  return out;
}

TestReport ms_test(const MultiSample& x, const MultiSample& y, const BasisSystem& basis, double alpha,
                   const MsConfig& cfg, const RngStream& stream) {
  check_dims(x, y);
  TestReport report;
  report.method = "ms";
  report.alpha = alpha;
  report.d = basis.size();
  report.basis = basis.kind();
  report.n = x.size();
  report.m = y.size();
  report.seed = stream.seed();
  report.resamples = cfg.bootstrap_replicates;

  const MaxStatistic stat = max_statistic(x, y, basis, cfg.search, stream.child(0));
  report.swapped = stat.swapped;
  const MultiSample& reference = stat.swapped ? y : x;
  const BootstrapResult boot =
      bootstrap_critical_value(reference, basis, alpha, cfg.bootstrap_replicates, cfg.bootstrap_search, stream.child(1));
  report.statistic = stat.value;
  report.critical_value = boot.critical_value;
  report.reject = report.statistic >= boot.critical_value;
  report.direction.assign(stat.search.best_direction.unit().begin(), stat.search.best_direction.unit().end());
  if (x.dim() == 1) {
    report.notes.push_back("p = 1: delegated to the univariate smooth statistic (u = +1) with multiplier-bootstrap calibration");
  }
  if (static_cast<std::size_t>(basis.size()) > std::min(x.size(), y.size())) {
    report.notes.push_back("d exceeds min(n, m)");
  }
  return report;
}

double bf_statistic(const MultiSample& x, const MultiSample& y, std::span<const Direction> directions) {
  check_dims(x, y);
  if (directions.empty()) throw DomainError("direction count must be >= 1");
  double total = 0.0;
  for (const Direction& dir : directions) total += edf_l2_distance(project(x, dir), project(y, dir));
  return size_scale(x.size(), y.size()) * (total / static_cast<double>(directions.size()));
}

double bf_statistic(const MultiSample& x, const MultiSample& y, std::size_t directions, RngStream& stream) {
  check_dims(x, y);
  const auto dirs = draw_directions(x.dim(), directions, stream);
  return bf_statistic(x, y, dirs);
}

TestReport bf_test(const MultiSample& x, const MultiSample& y, std::size_t directions, double alpha,
                   std::size_t permutations, const RngStream& stream) {
  check_dims(x, y);
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  if (permutations < 1) throw DomainError("permutation count must be >= 1");
  RngStream direction_stream = stream.child(0);
  const auto dirs = draw_directions(x.dim(), directions, direction_stream);

  TestReport report;
  report.method = "bf";
  report.alpha = alpha;
  report.n = x.size();
  report.m = y.size();
  report.seed = stream.seed();
  report.resamples = permutations;
  report.statistic = bf_statistic(x, y, dirs);

  const std::size_t p = x.dim();
  const std::size_t n = x.size(), m = y.size(), total = n + m;
  std::vector<std::size_t> order(total);
  RngStream permutation_stream = stream.child(1);
  std::size_t at_least = 0;
  std::vector<double> new_x(n * p), new_y(m * p);
  auto pooled_row = [&](std::size_t i) { return i < n ? x.row(i) : y.row(i - n); };
  for (std::size_t b = 0; b < permutations; ++b) {
    for (std::size_t i = 0; i < total; ++i) order[i] = i;
    for (std::size_t t = 0; t < m; ++t) std::swap(order[t], order[t + permutation_stream.uniform_index(total - t)]);
    for (std::size_t t = 0; t < m; ++t) std::ranges::copy(pooled_row(order[t]), new_y.begin() + t * p);
    for (std::size_t t = 0; t < n; ++t) std::ranges::copy(pooled_row(order[m + t]), new_x.begin() + t * p);
    if (bf_statistic(MultiSample(p, new_x), MultiSample(p, new_y), dirs) >= report.statistic) ++at_least;
  }
  report.p_value = static_cast<double>(1 + at_least) / static_cast<double>(permutations + 1);
  report.reject = *report.p_value <= alpha;
  return report;
}

}  // namespace smoothtest

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
#include <vector>

#include "smoothtest/rng.hpp"

namespace smoothtest {

// Univariate sample with a cached sorted copy.
class UniSample {
 public:
  // Throws DomainError if values is empty or holds a non-finite entry.
  explicit UniSample(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> sorted() const noexcept { return sorted_; }
  bool has_ties() const noexcept { return has_ties_; }

  // #{values <= t}.
  std::size_t count_at_most(double t) const noexcept;

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
  bool has_ties_ = false;
};

// F_n(t) = (1/n) #{X_i <= t}; right-continuous, by binary search.
double edf_eval(const UniSample& sample, double t);

// Empirical probability-integral transforms V_j = F_n(Y_j) of y through the
// EDF of x, in the order of y.
std::vector<double> pit_values(const UniSample& x, const UniSample& y);
// The integer numerators n F_n(Y_j).
std::vector<std::size_t> pit_counts(const UniSample& x, const UniSample& y);

// H_{n,m}(t) = (n F_n(t) + m G_m(t)) / (n + m).
double pooled_edf(const UniSample& x, const UniSample& y, double t);

// n observations in p dimensions, stored row-major.
class MultiSample {
 public:
  MultiSample(std::size_t dim, std::vector<double> row_major);
  static MultiSample from_rows(const std::vector<std::vector<double>>& rows);
  static MultiSample from_univariate(const UniSample& sample);

  std::size_t size() const noexcept { return data_.size() / dim_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * dim_, dim_}; }
  std::span<const double> data() const noexcept { return data_; }
  // Column c as a univariate sample.
  UniSample column(std::size_t c) const;

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

// A point u on the unit sphere together with spherical angles generating it:
//   u_1 = cos a_1, u_2 = sin a_1 cos a_2, ..., u_p = sin a_1 ... sin a_{p-1}.
class Direction {
 public:
  static Direction from_angles(std::span<const double> angles);
  // Normalizes v; throws DomainError for a zero or non-finite vector.
  static Direction from_vector(std::span<const double> v);
  // Uniform on the sphere: a normalized vector of p gaussians.
  static Direction random(std::size_t p, RngStream& stream);
  static Direction axis(std::size_t p, std::size_t k, bool negative = false);

  std::size_t dim() const noexcept { return unit_.size(); }
  std::span<const double> unit() const noexcept { return unit_; }
  std::span<const double> angles() const noexcept { return angles_; }

 private:
  Direction(std::vector<double> unit, std::vector<double> angles)
      : unit_(std::move(unit)), angles_(std::move(angles)) {}

  std::vector<double> unit_;
  std::vector<double> angles_;
};

// Writes u . row_i into out; the inner product is accumulated left to right.
void project_into(const MultiSample& sample, std::span<const double> u, std::span<double> out);

inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Sample of projections u . X_i; throws DomainError on dimension mismatch.
UniSample project(const MultiSample& sample, const Direction& dir);

}  // namespace smoothtest

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

#include "smoothtest/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smoothtest/numerics.hpp"

namespace smoothtest {

UniSample::UniSample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("sample must contain at least one observation");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DomainError("sample value " + std::to_string(i + 1) + " is not finite");
    }
  }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end());
  has_ties_ = std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end();
}

std::size_t UniSample::count_at_most(double t) const noexcept {
  return static_cast<std::size_t>(std::upper_bound(sorted_.begin(), sorted_.end(), t) - sorted_.begin());
}

double edf_eval(const UniSample& sample, double t) {
  return static_cast<double>(sample.count_at_most(t)) / static_cast<double>(sample.size());
}

std::vector<std::size_t> pit_counts(const UniSample& x, const UniSample& y) {
  std::vector<std::size_t> counts;
  counts.reserve(y.size());
  for (double v : y.values()) counts.push_back(x.count_at_most(v));
  return counts;
}

std::vector<double> pit_values(const UniSample& x, const UniSample& y) {
  const auto n = static_cast<double>(x.size());
  std::vector<double> out;
  out.reserve(y.size());
  for (std::size_t c : pit_counts(x, y)) out.push_back(static_cast<double>(c) / n);
  return out;
}

double pooled_edf(const UniSample& x, const UniSample& y, double t) {
  const auto total = static_cast<double>(x.size() + y.size());
  return static_cast<double>(x.count_at_most(t) + y.count_at_most(t)) / total;
}

MultiSample::MultiSample(std::size_t dim, std::vector<double> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (dim_ == 0) throw DomainError("sample dimension must be >= 1");
  if (data_.empty()) throw DomainError("sample must contain at least one observation");
  if (data_.size() % dim_ != 0) throw DomainError("sample data length is not a multiple of the dimension");
  for (double v : data_) {
    if (!std::isfinite(v)) throw DomainError("sample contains a non-finite value");
  }
}

MultiSample MultiSample::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DomainError("sample must contain at least one observation");
  const std::size_t p = rows.front().size();
  std::vector<double> data;
  data.reserve(rows.size() * p);
  for (const auto& r : rows) {
    if (r.size() != p) throw DomainError("all rows must have the same dimension");
    data.insert(data.end(), r.begin(), r.end());
  }
  return MultiSample(p, std::move(data));
}

MultiSample MultiSample::from_univariate(const UniSample& sample) {
  return MultiSample(1, std::vector<double>(sample.values().begin(), sample.values().end()));
}

UniSample MultiSample::column(std::size_t c) const {
  if (c >= dim_) throw DomainError("column index out of range");
  std::vector<double> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = data_[i * dim_ + c];
  return UniSample(std::move(out));
}

Direction Direction::from_angles(std::span<const double> angles) {
  const std::size_t p = angles.size() + 1;
  std::vector<double> u(p);
  double sin_product = 1.0;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    u[i] = sin_product * std::cos(angles[i]);
    sin_product *= std::sin(angles[i]);
  }
  u[p - 1] = sin_product;
  return Direction(std::move(u), std::vector<double>(angles.begin(), angles.end()));
}

Direction Direction::from_vector(std::span<const double> v) {
  if (v.empty()) throw DomainError("direction must have dimension >= 1");
  const double norm = std::sqrt(dot(v, v));
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DomainError("cannot normalize a zero or non-finite vector");
  const std::size_t p = v.size();
  std::vector<double> u(p);
  for (std::size_t i = 0; i < p; ++i) u[i] = v[i] / norm;
  // Recover angles from tail norms: a_i = atan2(|u_{i+1..p}|, u_i), with the
  // last angle signed.
  std::vector<double> angles(p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i) {
    if (i + 2 == p) {
      angles[i] = std::atan2(u[p - 1], u[p - 2]);
    } else {
      double tail = 0.0;
      for (std::size_t j = i + 1; j < p; ++j) tail += u[j] * u[j];
      angles[i] = std::atan2(std::sqrt(tail), u[i]);
    }
  }
  return Direction(std::move(u), std::move(angles));
}

Direction Direction::random(std::size_t p, RngStream& stream) {
  if (p == 0) throw DomainError("direction must have dimension >= 1");
  std::vector<double> v(p);
  for (;;) {
    double norm2 = 0.0;
    for (double& x : v) {
      x = stream.gaussian();
      norm2 += x * x;
    }
    if (norm2 > 0.0) break;
  }
  return from_vector(v);
}

Direction Direction::axis(std::size_t p, std::size_t k, bool negative) {
  if (k >= p) throw DomainError("axis index out of range");
  std::vector<double> v(p, 0.0);
  v[k] = negative ? -1.0 : 1.0;
  return from_vector(v);
}

void project_into(const MultiSample& sample, std::span<const double> u, std::span<double> out) {
  const std::size_t p = sample.dim();
  const double* data = sample.data().data();
  const std::size_t n = sample.size();
  if (p == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = u[0] * data[i];
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = data + i * p;
    double s = 0.0;
    for (std::size_t c = 0; c < p; ++c) s += u[c] * row[c];
    out[i] = s;
  }
}

UniSample project(const MultiSample& sample, const Direction& dir) {
  if (dir.dim() != sample.dim()) throw DomainError("direction dimension does not match sample dimension");
  std::vector<double> out(sample.size());
  project_into(sample, dir.unit(), out);
  return UniSample(std::move(out));
}

}  // namespace smoothtest

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

#include "smoothtest/basis.hpp"

#include <cmath>
#include <numbers>

#include "smoothtest/numerics.hpp"

namespace smoothtest {
namespace {

inline double trig_value(int k, double z) {
  return std::numbers::sqrt2 * std::cos(std::numbers::pi * k * z);
}

inline double legendre_scale(int k) { return std::sqrt(2.0 * k + 1.0); }

}  // namespace

std::string_view to_string(BasisKind kind) {
  return kind == BasisKind::Trigonometric ? "trig" : "legendre";
}

BasisKind parse_basis_kind(std::string_view text) {
  if (text == "trig" || text == "trigonometric") return BasisKind::Trigonometric;
  if (text == "legendre" || text == "lp") return BasisKind::Legendre;
  throw DomainError("unknown basis '" + std::string(text) + "' (expected trig or legendre)");
}

BasisSystem::BasisSystem(BasisKind kind, int d) : kind_(kind), d_(d) {
  if (d < 1) throw DomainError("d must be >= 1");
}

void BasisSystem::check_point(double z) const {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw DomainError("basis argument must lie in [0, 1], got " + std::to_string(z));
  }
}

double BasisSystem::eval(int k, double z) const {
  if (k < 1 || k > d_) throw DomainError("basis index out of range [1, d]");
  check_point(z);
  if (kind_ == BasisKind::Trigonometric) return trig_value(k, z);
  const double x = 2.0 * z - 1.0;
  double previous = 1.0, current = x;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0) * x * current - j * previous) / (j + 1.0);
    previous = current;
    current = next;
  }
  return legendre_scale(k) * current;
}

std::vector<double> BasisSystem::eval_vector(double z) const {
  std::vector<double> out(static_cast<std::size_t>(d_));
  eval_into(z, out);
  return out;
}

void BasisSystem::eval_into(double z, std::span<double> out) const {
  if (out.size() != static_cast<std::size_t>(d_)) throw DomainError("eval_into: output size != d");
  check_point(z);
  if (kind_ == BasisKind::Trigonometric) {
    for (int k = 1; k <= d_; ++k) out[k - 1] = trig_value(k, z);
    return;
  }
  const double x = 2.0 * z - 1.0;
  double previous = 1.0, current = x;
  out[0] = legendre_scale(1) * current;
  for (int j = 1; j < d_; ++j) {
    const double next = ((2.0 * j + 1.0) * x * current - j * previous) / (j + 1.0);
    previous = current;
    current = next;
    out[j] = legendre_scale(j + 1) * current;
  }
}

double BasisSystem::derivative(int k, double z, int order) const {
  if (order < 0 || order > 2) throw DomainError("derivative order must be 0, 1 or 2");
  if (order == 0) return eval(k, z);
  if (k < 1 || k > d_) throw DomainError("basis index out of range [1, d]");
  check_point(z);
  if (kind_ == BasisKind::Trigonometric) {
    const double w = std::numbers::pi * k;
    if (order == 1) return -std::numbers::sqrt2 * w * std::sin(w * z);
    return -std::numbers::sqrt2 * w * w * std::cos(w * z);
  }
  // Carry (P, P', P'') up the recurrences; d/dz = 2 d/dx.
  const double x = 2.0 * z - 1.0;
  double p0 = 1.0, p1 = x;
  double dp0 = 0.0, dp1 = 1.0;
  double ddp0 = 0.0, ddp1 = 0.0;
  for (int j = 1; j < k; ++j) {
    const double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
    const double dp2 = dp0 + (2.0 * j + 1.0) * p1;
    const double ddp2 = ddp0 + (2.0 * j + 1.0) * dp1;
    p0 = p1, p1 = p2;
    dp0 = dp1, dp1 = dp2;
    ddp0 = ddp1, ddp1 = ddp2;
  }
  return order == 1 ? legendre_scale(k) * 2.0 * dp1 : legendre_scale(k) * 4.0 * ddp1;
}

double BasisSystem::bound(BasisKind kind, int order, int d) {
  if (order < 0 || order > 2) throw DomainError("bound order must be 0, 1 or 2");
  if (d < 1) throw DomainError("d must be >= 1");
  const double dd = d;
  if (kind == BasisKind::Legendre) {
    switch (order) {
      case 0: return std::sqrt(2.0 * dd + 1.0);
      case 1: return std::numbers::sqrt3 * std::pow(dd, 2.5);
      default: return std::pow(dd, 4.5) / std::numbers::sqrt3;
    }
  }
  switch (order) {
    case 0: return std::numbers::sqrt2;
    case 1: return std::numbers::sqrt2 * std::numbers::pi * dd;
    default: return std::numbers::sqrt2 * std::numbers::pi * std::numbers::pi * dd * dd;
  }
}

std::vector<double> gram_matrix(const BasisSystem& basis, int quadrature_order) {
  const int d = basis.size();
  if (quadrature_order < d + 1) throw DomainError("gram_matrix: quadrature order must be >= d + 1");
  const QuadratureRule rule = gauss_legendre(quadrature_order, 0.0, 1.0);
  std::vector<double> gram(static_cast<std::size_t>(d * d), 0.0);
  std::vector<double> values(static_cast<std::size_t>(d));
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    basis.eval_into(rule.nodes[q], values);
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < d; ++l) gram[k * d + l] += rule.weights[q] * values[k] * values[l];
    }
  }
  return gram;
}

RankTable::RankTable(const BasisSystem& basis, std::size_t n) : n_(n), d_(basis.size()) {
  if (n == 0) throw DomainError("RankTable: sample size must be >= 1");
  values_.resize((n + 1) * static_cast<std::size_t>(d_));
  for (std::size_t r = 0; r <= n; ++r) {
    basis.eval_into(static_cast<double>(r) / static_cast<double>(n),
                    std::span<double>(values_.data() + r * d_, static_cast<std::size_t>(d_)));
  }
}

}  // namespace smoothtest

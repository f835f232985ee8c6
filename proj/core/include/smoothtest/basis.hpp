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
#include <string>
#include <string_view>
#include <vector>

namespace smoothtest {

enum class BasisKind { Trigonometric, Legendre };

// "trig" / "legendre".
std::string_view to_string(BasisKind kind);
// Accepts "trig", "trigonometric", "legendre", "lp".
BasisKind parse_basis_kind(std::string_view text);

// Orthonormal system psi_1..psi_d on [0, 1]; psi_0 = 1 is implicit.
//
//   Trigonometric: psi_k(z) = sqrt(2) cos(pi k z)
//   Legendre:      psi_k(z) = sqrt(2k + 1) P_k(2z - 1)
//
// Legendre values come from the three-term recurrence on [-1, 1], which stays
// stable for the degrees used here (the Rodrigues form does not).
class BasisSystem {
 public:
  BasisSystem(BasisKind kind, int d);

  BasisKind kind() const noexcept { return kind_; }
  int size() const noexcept { return d_; }

  // psi_k(z) for 1 <= k <= d and 0 <= z <= 1.
  double eval(int k, double z) const;
  std::vector<double> eval_vector(double z) const;
  // Writes psi_1(z)..psi_d(z) into out (out.size() == d). Values are
  // bit-identical to eval(k, z).
  void eval_into(double z, std::span<double> out) const;

  // order-th derivative of psi_k at z, order in {0, 1, 2}; computed from
  // closed forms (trigonometric) or the derivative recurrences
  // P'_{k+1} = P'_{k-1} + (2k+1) P_k (Legendre), never by differencing.
  double derivative(int k, double z, int order) const;

  // Closed-form sup-norm bounds B_{order,d} over psi_1..psi_d:
  //   Legendre:      sqrt(2d+1), sqrt(3) d^{5/2}, d^{9/2} / sqrt(3)
  //   Trigonometric: sqrt(2),    sqrt(2) pi d,    sqrt(2) pi^2 d^2
  static double bound(BasisKind kind, int order, int d);
  double bound(int order) const { return bound(kind_, order, d_); }

 private:
  void check_point(double z) const;

  BasisKind kind_;
  int d_;
};

// d x d matrix (row-major) of Gauss-Legendre approximations to
// integral_0^1 psi_k psi_l; `quadrature_order` nodes, at least d + 1.
std::vector<double> gram_matrix(const BasisSystem& basis, int quadrature_order);

// Table of psi_k(r / n) for r = 0..n. Empirical PIT values are always of the
// form r / n, so statistics look basis values up here instead of
// re-evaluating them.
class RankTable {
 public:
  RankTable(const BasisSystem& basis, std::size_t n);

  std::size_t sample_size() const noexcept { return n_; }
  int size() const noexcept { return d_; }
  std::span<const double> row(std::size_t rank) const {
    return {values_.data() + rank * static_cast<std::size_t>(d_), static_cast<std::size_t>(d_)};
  }

 private:
  std::size_t n_;
  int d_;
  std::vector<double> values_;
};

}  // namespace smoothtest

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
#include <span>
#include <vector>

#include "smoothtest/empirical.hpp"
#include "smoothtest/numerics.hpp"
#include "smoothtest/rng.hpp"

namespace smoothtest {

struct SphereSearchResult {
  Direction best_direction;
  double best_value = 0.0;
  std::vector<double> restart_values;
  std::size_t evaluations = 0;
};

// Objective on unit vectors of R^p.
using SphereObjective = std::function<double(std::span<const double>)>;

// Multi-start Nelder-Mead over the p - 1 spherical angles (p >= 2).
//
// Candidate seeds are the coordinate axes +-e_k, 32 equispaced angles when
// p = 2, 256 p random directions and `extra_seeds`; they are ranked by value.
// Restart i starts from the (i/2)-th ranked seed when i is even and from a
// random direction drawn from stream.child(i) otherwise, so the starts of
// restart i do not depend on the total number of restarts. Restart values
// include the exact value of the seed they started from.
SphereSearchResult maximize_on_sphere(const SphereObjective& objective, std::size_t p, const OptimConfig& cfg,
                                      const RngStream& stream, std::span<const Direction> extra_seeds = {});

}  // namespace smoothtest

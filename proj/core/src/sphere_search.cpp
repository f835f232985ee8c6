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

#include "smoothtest/sphere_search.hpp"

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>

namespace smoothtest {
namespace {

constexpr int kPlanarGridSeeds = 32;
// Random candidate directions per dimension, drawn from a child stream no
// restart uses. On the piecewise-constant objective a dense pool of starts
// does more than extra simplex iterations.
constexpr std::size_t kRandomSeedsPerDim = 256;
constexpr std::uint64_t kSeedPoolStream = std::uint64_t{1} << 40;

struct Candidate {
  Direction direction;
  double value;
};

}  // namespace

SphereSearchResult maximize_on_sphere(const SphereObjective& objective, std::size_t p, const OptimConfig& cfg,
                                      const RngStream& stream, std::span<const Direction> extra_seeds) {
  cfg.validate();
  if (p < 2) throw DomainError("sphere search needs dimension p >= 2");

  std::size_t evaluations = 0;
  auto value_at = [&](const Direction& dir) {
    ++evaluations;
    return objective(dir.unit());
  };

  std::vector<Candidate> seeds;
  for (std::size_t k = 0; k < p; ++k) {
    for (bool negative : {false, true}) {
      auto dir = Direction::axis(p, k, negative);
      const double v = value_at(dir);
      seeds.push_back({std::move(dir), v});
    }
  }
  if (p == 2) {
    for (int i = 0; i < kPlanarGridSeeds; ++i) {
      const double angle = 2.0 * std::numbers::pi * i / kPlanarGridSeeds;
      auto dir = Direction::from_angles(std::span<const double>(&angle, 1));
      const double v = value_at(dir);
      seeds.push_back({std::move(dir), v});
    }
  }
  {
    RngStream pool = stream.child(kSeedPoolStream);
    for (std::size_t i = 0; i < kRandomSeedsPerDim * p; ++i) {
      auto dir = Direction::random(p, pool);
      const double v = value_at(dir);
      seeds.push_back({std::move(dir), v});
    }
  }
  for (const Direction& dir : extra_seeds) {
    if (dir.dim() != p) throw DomainError("seed direction dimension does not match p");
    const double v = value_at(dir);
    seeds.push_back({dir, v});
  }
  std::stable_sort(seeds.begin(), seeds.end(),
                   [](const Candidate& a, const Candidate& b) { return a.value > b.value; });

  const Objective on_angles = [&](std::span<const double> angles) {
    return objective(Direction::from_angles(angles).unit());
  };

  SphereSearchResult result{seeds.front().direction, seeds.front().value, {}, 0};
  result.restart_values.reserve(static_cast<std::size_t>(cfg.restarts));
  for (int i = 0; i < cfg.restarts; ++i) {
    const auto seed_index = static_cast<std::size_t>(i / 2);
    std::optional<Candidate> start;
    if (i % 2 == 0 && seed_index < seeds.size()) {
      start = seeds[seed_index];
    } else {
      RngStream restart_stream = stream.child(static_cast<std::uint64_t>(i));
      auto dir = Direction::random(p, restart_stream);
      const double v = value_at(dir);
      start = Candidate{std::move(dir), v};
    }

    const OptimResult nm = nelder_mead(on_angles, start->direction.angles(), cfg);
    evaluations += static_cast<std::size_t>(nm.evaluations);
    Candidate restart_best = *start;
    if (nm.value > restart_best.value) restart_best = Candidate{Direction::from_angles(nm.argmax), nm.value};

    result.restart_values.push_back(restart_best.value);
    if (i == 0 || restart_best.value > result.best_value) {
      result.best_direction = restart_best.direction;
      result.best_value = restart_best.value;
    }
  }
  result.evaluations = evaluations;
  return result;
}

}  // namespace smoothtest

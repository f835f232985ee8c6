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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smoothtest/experiment.hpp"
#include "smoothtest/generators.hpp"

namespace smoothtest {

// Simulation plans are flat text files of `key = value` lines; `#` starts a
// comment and blank lines are ignored. Keys:
//
//   name                output file prefix (default "experiment")
//   experiment          size | power | statistics (default size)
//   x, y                generator labels, e.g. gamma(2,2); y defaults to x
//   example             example id for power curves; sets x and y
//   grid                comma-separated parameter values (power only)
//   sizes               comma-separated NxM pairs, e.g. 120x90,180x150
//   tests               comma-separated test labels, e.g. smooth:trig:4,ks
//   alpha, replicates, seed, perm, bootstrap, restarts, bootstrap_restarts,
//   bf_directions, allow_clipped (true | false)
//
// Unknown or repeated keys are rejected.
enum class PlanKind { Size, Power, Statistics };

struct SamplePair {
  std::size_t n = 0;
  std::size_t m = 0;
};

struct SimulationPlan {
  std::string name = "experiment";
  PlanKind kind = PlanKind::Size;
  GeneratorSpec x;
  GeneratorSpec y;
  std::optional<int> example;
  std::vector<double> grid;
  std::vector<SamplePair> sizes;
  std::vector<MethodSpec> tests;
  TestSettings settings;
  std::size_t replicates = 1000;
  std::optional<std::uint64_t> seed;
  bool allow_clipped = false;
};

// Throws InputError naming the offending line for grammar errors and
// DomainError for out-of-range values.
SimulationPlan parse_plan(std::string_view text);

// Fully resolved plan (defaults included) in the same grammar; parsing the
// result gives back an equivalent plan.
std::string render_plan(const SimulationPlan& plan);

struct SeriesOutput {
  std::string file_name;
  SamplePair sizes;
  MethodSpec test;
  std::string csv;
};

// One CSV per (sizes, test) pair. Size and power series use the header
// `param,rate,se,R,seed` (param is NA for size rows); statistics series use
// `replicate,statistic`. Requires plan.seed.
std::vector<SeriesOutput> run_plan(const SimulationPlan& plan, unsigned jobs);

}  // namespace smoothtest

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
#include <string>
#include <string_view>
#include <vector>

#include "smoothtest/basis.hpp"
#include "smoothtest/empirical.hpp"
#include "smoothtest/generators.hpp"
#include "smoothtest/report.hpp"
#include "smoothtest/rng.hpp"

namespace smoothtest {

enum class Method { Smooth, Ks, Cvm, Bgx, Ms, Bf };

struct MethodSpec {
  Method method = Method::Smooth;
  BasisKind basis = BasisKind::Trigonometric;
  // Truncation for smooth, bgx and ms; ignored otherwise.
  int d = 10;
};

// "name[:basis][:d]" for smooth, bgx and ms; "ks", "cvm", "bf".
// Defaults: smooth:trig:10, bgx:legendre:4, ms:trig:4.
MethodSpec parse_method(std::string_view text);
// Canonical label, e.g. "smooth:trig:4", "bgx:legendre:4", "ks".
std::string to_string(const MethodSpec& spec);
bool is_multivariate(Method method) noexcept;

// Calibration parameters shared by all methods.
struct TestSettings {
  double alpha = 0.05;
  std::size_t permutations = 999;
  std::size_t bootstrap = 500;
  int restarts = 10;
  int bootstrap_restarts = 5;
  std::size_t bf_directions = 100;

  void validate() const;
};

TestReport run_test(const MethodSpec& method, const UniSample& x, const UniSample& y,
                    const TestSettings& settings, const RngStream& stream);
// Univariate methods require p = 1; ms and bf accept any p.
TestReport run_test(const MethodSpec& method, const MultiSample& x, const MultiSample& y,
                    const TestSettings& settings, const RngStream& stream);

struct ExperimentConfig {
  GeneratorSpec x_spec;
  GeneratorSpec y_spec;
  std::size_t n = 180;
  std::size_t m = 150;
  MethodSpec method;
  TestSettings settings;
  std::size_t replicates = 1000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;

  void validate() const;
};

struct ExperimentResult {
  std::size_t rejections = 0;
  std::size_t replicates = 0;
  double rate = 0.0;
  // sqrt(rate (1 - rate) / R).
  double se = 0.0;
};

// Replicate r draws x from RngStream(seed).child(r).child(0), y from
// .child(1), and calibrates with .child(2), so results do not depend on jobs.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// run_experiment with x_spec and y_spec required to be the same law.
ExperimentResult size_experiment(const ExperimentConfig& cfg);

// Test statistic of every replicate, in replicate order.
std::vector<double> replicate_statistics(const ExperimentConfig& cfg);

struct PowerPoint {
  double param = 0.0;
  ExperimentResult result;
};

// One experiment per grid value with y_spec's parameter replaced by it.
// y_spec must be an example model.
std::vector<PowerPoint> power_curve(const ExperimentConfig& cfg, const std::vector<double>& grid);

}  // namespace smoothtest

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
#include <vector>

#include "smoothtest/basis.hpp"

namespace smoothtest {

// Outcome of one two-sample test.
//
// Exactly one of critical_value / p_value is normally set; reject follows
// statistic >= critical_value or p_value <= alpha respectively.
struct TestReport {
  std::string method;
  double statistic = 0.0;
  std::optional<double> critical_value;
  std::optional<double> p_value;
  bool reject = false;
  double alpha = 0.05;
  std::optional<int> d;
  std::optional<BasisKind> basis;
  std::size_t n = 0;
  std::size_t m = 0;
  // The samples were exchanged so that the reference sample is the larger one.
  bool swapped = false;
  std::optional<std::uint64_t> seed;
  // Calibration size: permutations or bootstrap replicates.
  std::optional<std::size_t> resamples;
  // Best separating direction (multivariate tests).
  std::vector<double> direction;
  std::vector<std::string> notes;
};

}  // namespace smoothtest

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
#include <istream>
#include <string>
#include <vector>

namespace smoothtest::cli {

// Numeric table read from comma-separated text: '.' decimals, an optional
// single header row (detected by a non-numeric first field), blank lines
// ignored. Malformed rows raise InputError naming the line.
struct Table {
  std::vector<std::string> header;
  std::size_t columns = 0;
  std::vector<double> values;  // row-major

  std::size_t rows() const { return columns == 0 ? 0 : values.size() / columns; }
};

Table read_csv(std::istream& in, const std::string& source);
Table read_csv_file(const std::string& path);

}  // namespace smoothtest::cli

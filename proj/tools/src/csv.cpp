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

#include "smoothtest_cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>

#include "smoothtest/errors.hpp"

namespace smoothtest::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits on commas outside double quotes; quotes are dropped and "" inside
// a quoted field stands for one quote character.
std::vector<std::string> fields(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '"') {
      if (quoted && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else {
        quoted = !quoted;
      }
    } else if (c == ',' && !quoted) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  for (auto& f : out) f = std::string(trim(f));
  return out;
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

Table read_csv(std::istream& in, const std::string& source) {
  Table table;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto row = fields(line);
    double value = 0.0;
    if (first) {
      first = false;
      table.columns = row.size();
      if (!parse_double(row[0], value)) {
        table.header = row;
        continue;
      }
    }
    if (row.size() != table.columns) {
      throw InputError(source + ":" + std::to_string(line_no) + ": expected " + std::to_string(table.columns) +
                       " columns, found " + std::to_string(row.size()));
    }
    for (const auto& f : row) {
      if (!parse_double(f, value)) {
        throw InputError(source + ":" + std::to_string(line_no) + ": not a number: '" + f + "'");
      }
      if (!std::isfinite(value)) {
        throw InputError(source + ":" + std::to_string(line_no) + ": non-finite value '" + f + "'");
      }
      table.values.push_back(value);
    }
  }
  if (table.values.empty()) throw InputError(source + ": no data rows");
  return table;
}

Table read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_csv(in, path);
}

}  // namespace smoothtest::cli

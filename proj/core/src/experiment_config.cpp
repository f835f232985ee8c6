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

#include "smoothtest/experiment_config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "smoothtest/errors.hpp"
#include "smoothtest/numerics.hpp"

namespace smoothtest {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits on commas that are not inside parentheses, so generator labels
// with argument lists survive.
std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

template <typename T>
T parse_integer(std::string_view token) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

double parse_real(std::string_view token) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw InputError("expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

bool parse_bool(std::string_view token) {
  if (token == "true" || token == "1" || token == "yes") return true;
  if (token == "false" || token == "0" || token == "no") return false;
  throw InputError("expected true or false, got '" + std::string(token) + "'");
}

std::string_view kind_name(PlanKind kind) {
  switch (kind) {
    case PlanKind::Size: return "size";
    case PlanKind::Power: return "power";
    case PlanKind::Statistics: return "statistics";
  }
  return "size";
}

std::string file_stem(const MethodSpec& test) {
  std::string label = to_string(test);
  for (char& c : label)
    if (c == ':') c = '-';
  return label;
}

const std::set<std::string_view> kKeys = {
    "name",    "experiment", "x",         "y",         "example",   "grid",
    "sizes",   "tests",      "alpha",     "replicates", "seed",     "perm",
    "bootstrap", "restarts", "bootstrap_restarts", "bf_directions", "allow_clipped",
};

}  // namespace

SimulationPlan parse_plan(std::string_view text) {
  std::map<std::string, std::pair<std::string, std::size_t>> entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!kKeys.contains(key)) throw InputError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (value.empty()) throw InputError("line " + std::to_string(line_no) + ": empty value for '" + key + "'");
    if (!entries.emplace(key, std::pair{value, line_no}).second) {
      throw InputError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }

  SimulationPlan plan;
  auto with_line = [&](const std::string& key, auto&& apply) {
    const auto it = entries.find(key);
    if (it == entries.end()) return false;
    try {
      apply(std::string_view(it->second.first));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(it->second.second) + ": " + e.what());
    } catch (const DomainError& e) {
      throw DomainError("line " + std::to_string(it->second.second) + ": " + e.what());
    }
    return true;
  };

  with_line("name", [&](std::string_view v) {
    for (char c : v)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) {
        throw InputError("name may only contain letters, digits, '_', '-', '.'");
      }
    plan.name = v;
  });
  with_line("experiment", [&](std::string_view v) {
    if (v == "size") plan.kind = PlanKind::Size;
    else if (v == "power") plan.kind = PlanKind::Power;
    else if (v == "statistics") plan.kind = PlanKind::Statistics;
    else throw InputError("experiment must be size, power or statistics");
  });
  with_line("allow_clipped", [&](std::string_view v) { plan.allow_clipped = parse_bool(v); });
  with_line("alpha", [&](std::string_view v) { plan.settings.alpha = parse_real(v); });
  with_line("replicates", [&](std::string_view v) { plan.replicates = parse_integer<std::size_t>(v); });
  with_line("seed", [&](std::string_view v) { plan.seed = parse_integer<std::uint64_t>(v); });
  with_line("perm", [&](std::string_view v) { plan.settings.permutations = parse_integer<std::size_t>(v); });
  with_line("bootstrap", [&](std::string_view v) { plan.settings.bootstrap = parse_integer<std::size_t>(v); });
  with_line("restarts", [&](std::string_view v) { plan.settings.restarts = parse_integer<int>(v); });
  with_line("bootstrap_restarts",
            [&](std::string_view v) { plan.settings.bootstrap_restarts = parse_integer<int>(v); });
  with_line("bf_directions",
            [&](std::string_view v) { plan.settings.bf_directions = parse_integer<std::size_t>(v); });
  with_line("sizes", [&](std::string_view v) {
    for (auto item : split_list(v)) {
      const std::size_t x = item.find('x');
      if (x == std::string_view::npos) throw InputError("sizes entries look like 180x150, got '" + std::string(item) + "'");
      plan.sizes.push_back({parse_integer<std::size_t>(trim(item.substr(0, x))),
                            parse_integer<std::size_t>(trim(item.substr(x + 1)))});
    }
  });
  with_line("tests", [&](std::string_view v) {
    for (auto item : split_list(v)) plan.tests.push_back(parse_method(item));
  });
  with_line("grid", [&](std::string_view v) {
    for (auto item : split_list(v)) plan.grid.push_back(parse_real(item));
  });

  const bool has_x = with_line("x", [&](std::string_view v) { plan.x = parse_generator(v); });
  const bool has_y = with_line("y", [&](std::string_view v) { plan.y = parse_generator(v); });
  const bool has_example = with_line("example", [&](std::string_view v) {
    const int id = parse_integer<int>(v);
    example_param_range(id);
    plan.example = id;
  });

  auto fail = [](const std::string& what) { throw InputError(what); };
  if (plan.kind == PlanKind::Power) {
    if (!has_example) fail("power experiments need 'example'");
    if (has_x || has_y) fail("power experiments take 'example' instead of 'x'/'y'");
    if (plan.grid.empty()) fail("power experiments need 'grid'");
    auto [lo, hi] = example_param_range(*plan.example);
    if (*plan.example == 5 && plan.allow_clipped) hi = 2.0;
    for (double g : plan.grid) {
      if (!(g >= lo && g <= hi)) {
        throw DomainError("grid value " + format_real(g) + " outside [" + format_real(lo) + ", " +
                          format_real(hi) + "] for example " + std::to_string(*plan.example));
      }
    }
    plan.x = example_baseline(*plan.example);
    plan.y = ExampleModel{*plan.example, lo, plan.allow_clipped};
  } else {
    if (has_example || !plan.grid.empty()) fail("'example' and 'grid' are only valid for power experiments");
    if (!has_x) fail("'x' is required");
    if (!has_y) plan.y = plan.x;
    if (plan.kind == PlanKind::Size && to_string(plan.x) != to_string(plan.y)) {
      fail("size experiments need x and y to be the same law");
    }
    Generator gx(plan.x), gy(plan.y);
    if (gx.dim() != gy.dim()) fail("x and y differ in dimension");
  }
  if (plan.sizes.empty()) fail("'sizes' is required");
  if (plan.tests.empty()) fail("'tests' is required");
  for (const auto& s : plan.sizes)
    if (s.n < 2 || s.m < 2) throw DomainError("sample sizes must be >= 2");
  if (plan.replicates < 1) throw DomainError("replicates must be >= 1");
  plan.settings.validate();
  return plan;
}

std::string render_plan(const SimulationPlan& plan) {
  std::string out;
  auto put = [&](std::string_view key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  put("name", plan.name);
  put("experiment", std::string(kind_name(plan.kind)));
  if (plan.kind == PlanKind::Power) {
    put("example", std::to_string(*plan.example));
    std::string grid;
    for (std::size_t i = 0; i < plan.grid.size(); ++i) grid += (i ? "," : "") + format_real(plan.grid[i]);
    put("grid", grid);
  } else {
    put("x", to_string(plan.x));
    put("y", to_string(plan.y));
  }
  std::string sizes;
  for (std::size_t i = 0; i < plan.sizes.size(); ++i) {
    sizes += (i ? "," : "") + std::to_string(plan.sizes[i].n) + "x" + std::to_string(plan.sizes[i].m);
  }
  put("sizes", sizes);
  std::string tests;
  for (std::size_t i = 0; i < plan.tests.size(); ++i) tests += (i ? "," : "") + to_string(plan.tests[i]);
  put("tests", tests);
  put("alpha", format_real(plan.settings.alpha));
  put("replicates", std::to_string(plan.replicates));
  if (plan.seed) put("seed", std::to_string(*plan.seed));
  put("perm", std::to_string(plan.settings.permutations));
  put("bootstrap", std::to_string(plan.settings.bootstrap));
  put("restarts", std::to_string(plan.settings.restarts));
  put("bootstrap_restarts", std::to_string(plan.settings.bootstrap_restarts));
  put("bf_directions", std::to_string(plan.settings.bf_directions));
  put("allow_clipped", plan.allow_clipped ? "true" : "false");
  return out;
}

std::vector<SeriesOutput> run_plan(const SimulationPlan& plan, unsigned jobs) {
  if (!plan.seed) throw DomainError("simulation plan has no seed");
  std::vector<SeriesOutput> outputs;
  for (const auto& sizes : plan.sizes) {
    for (const auto& test : plan.tests) {
      ExperimentConfig cfg;
      cfg.x_spec = plan.x;
      cfg.y_spec = plan.y;
      cfg.n = sizes.n;
      cfg.m = sizes.m;
      cfg.method = test;
      cfg.settings = plan.settings;
      cfg.replicates = plan.replicates;
      cfg.seed = *plan.seed;
      cfg.jobs = jobs;

      SeriesOutput series;
      series.sizes = sizes;
      series.test = test;
      series.file_name = plan.name + "_" + std::to_string(sizes.n) + "x" + std::to_string(sizes.m) + "_" +
                         file_stem(test) + ".csv";
      const std::string seed = std::to_string(*plan.seed);
      auto row = [&](const std::string& param, const ExperimentResult& r) {
        series.csv += param + "," + format_real(r.rate) + "," + format_real(r.se) + "," +
                      std::to_string(r.replicates) + "," + seed + "\n";
      };
      switch (plan.kind) {
        case PlanKind::Size:
          series.csv = "param,rate,se,R,seed\n";
          row("NA", size_experiment(cfg));
          break;
        case PlanKind::Power:
          series.csv = "param,rate,se,R,seed\n";
          for (const auto& point : power_curve(cfg, plan.grid)) row(format_real(point.param), point.result);
          break;
        case PlanKind::Statistics: {
          series.csv = "replicate,statistic\n";
          const auto values = replicate_statistics(cfg);
          for (std::size_t r = 0; r < values.size(); ++r) {
            series.csv += std::to_string(r) + "," + format_real(values[r]) + "\n";
          }
          break;
        }
      }
      outputs.push_back(std::move(series));
    }
  }
  return outputs;
}

}  // namespace smoothtest

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

#include "smoothtest_cli/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "smoothtest/errors.hpp"
#include "smoothtest/experiment.hpp"
#include "smoothtest/experiment_config.hpp"
#include "smoothtest/generators.hpp"
#include "smoothtest/multivariate.hpp"
#include "smoothtest/numerics.hpp"
#include "smoothtest/univariate.hpp"
#include "smoothtest_cli/csv.hpp"

#ifndef SMOOTHTEST_VERSION
#define SMOOTHTEST_VERSION "unknown"
#endif

namespace smoothtest::cli {
namespace {

using Json = nlohmann::ordered_json;

template <typename T>
T parse_integer(const std::string& text, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError(std::string(what) + ": expected an integer, got '" + text + "'");
  }
  return value;
}

// --seed, then the simulation plan, then SMOOTHTEST_SEED, then kDefaultSeed.
std::uint64_t resolve_seed(const std::string& flag, std::optional<std::uint64_t> plan_seed = std::nullopt) {
  if (!flag.empty()) return parse_integer<std::uint64_t>(flag, "--seed");
  if (plan_seed) return *plan_seed;
  if (const char* env = std::getenv("SMOOTHTEST_SEED"); env != nullptr && *env != '\0') {
    return parse_integer<std::uint64_t>(env, "SMOOTHTEST_SEED");
  }
  return kDefaultSeed;
}

Json optional_json(const auto& value) {
  if (value) return Json(*value);
  return Json(nullptr);
}

Json report_json(const TestReport& r) {
  Json j;
  j["method"] = r.method;
  j["statistic"] = r.statistic;
  j["critical_value"] = optional_json(r.critical_value);
  j["p_value"] = optional_json(r.p_value);
  j["reject"] = r.reject;
  j["alpha"] = r.alpha;
  j["d"] = optional_json(r.d);
  j["basis"] = r.basis ? Json(std::string(to_string(*r.basis))) : Json(nullptr);
  j["n"] = r.n;
  j["m"] = r.m;
  j["swapped"] = r.swapped;
  j["seed"] = optional_json(r.seed);
  j["resamples"] = optional_json(r.resamples);
  if (!r.direction.empty()) j["direction"] = r.direction;
  j["notes"] = r.notes;
  return j;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

UniSample load_univariate(const std::string& path) {
  const Table t = read_csv_file(path);
  if (t.columns != 1) {
    throw InputError(path + ": expected one numeric column, found " + std::to_string(t.columns));
  }
  return UniSample(t.values);
}

MultiSample load_multivariate(const std::string& path) {
  const Table t = read_csv_file(path);
  return MultiSample(t.columns, t.values);
}

std::string number(double v) { return format_real(v); }

struct UniArgs {
  std::string x, y, method = "smooth", basis, d, seed, out;
  double alpha = 0.05;
  std::size_t perm = kDefaultPermutations;
  int dmax = kDefaultMaxTruncation;
};

int cmd_test_uni(const UniArgs& a, std::ostream& out) {
  const UniSample x = load_univariate(a.x);
  const UniSample y = load_univariate(a.y);
  MethodSpec spec = parse_method(a.method);
  if (spec.method == Method::Ms || spec.method == Method::Bf) {
    throw InputError("test-uni supports smooth, ks, cvm and bgx; use test-multi for " + a.method);
  }
  if (!a.basis.empty()) spec.basis = parse_basis_kind(a.basis);
  const bool auto_d = a.d == "auto";
  if (auto_d) {
    spec.d = select_d_schwarz(x, y, spec.basis, a.dmax);
  } else if (!a.d.empty()) {
    spec.d = parse_integer<int>(a.d, "--d");
  }
  const std::uint64_t seed = resolve_seed(a.seed);
  TestSettings settings;
  settings.alpha = a.alpha;
  settings.permutations = a.perm;
  TestReport report = run_test(spec, x, y, settings, RngStream(seed));
  if (auto_d) report.notes.push_back("d selected by the Schwarz rule over 1.." + std::to_string(a.dmax));

  std::vector<std::string> line = {"smoothtest", "test-uni", a.x, a.y, "--method", a.method};
  Json config;
  config["x"] = a.x;
  config["y"] = a.y;
  config["method"] = to_string(spec);
  if (spec.method == Method::Smooth || spec.method == Method::Bgx) {
    config["basis"] = std::string(to_string(spec.basis));
    config["d"] = auto_d ? Json("auto") : Json(spec.d);
    line.insert(line.end(), {"--basis", std::string(to_string(spec.basis)), "--d",
                             auto_d ? std::string("auto") : std::to_string(spec.d)});
    if (auto_d) {
      config["dmax"] = a.dmax;
      line.insert(line.end(), {"--dmax", std::to_string(a.dmax)});
    }
  } else {
    config["perm"] = a.perm;
    line.insert(line.end(), {"--perm", std::to_string(a.perm)});
  }
  config["alpha"] = a.alpha;
  config["seed"] = seed;
  line.insert(line.end(), {"--alpha", number(a.alpha), "--seed", std::to_string(seed)});

  Json doc;
  doc["command"] = "test-uni";
  doc["version"] = SMOOTHTEST_VERSION;
  doc["config"] = config;
  doc["command_line"] = line;
  doc["result"] = report_json(report);
  emit(doc.dump(2) + "\n", a.out, out);
  return kExitOk;
}

struct MultiArgs {
  std::string x, y, method = "ms", basis = "trig", seed, out;
  int d = kDefaultMultivariateTruncation;
  double alpha = 0.05;
  std::size_t bootstrap = 500, perm = kDefaultPermutations, directions = 100;
  int restarts = 10, bootstrap_restarts = 5;
};

int cmd_test_multi(const MultiArgs& a, std::ostream& out) {
  const MultiSample x = load_multivariate(a.x);
  const MultiSample y = load_multivariate(a.y);
  if (x.dim() != y.dim()) {
    throw InputError("column count differs: " + a.x + " has " + std::to_string(x.dim()) + ", " + a.y + " has " +
                     std::to_string(y.dim()));
  }
  MethodSpec spec = parse_method(a.method);
  if (!is_multivariate(spec.method)) throw InputError("test-multi supports ms and bf");
  spec.basis = parse_basis_kind(a.basis);
  spec.d = a.d;
  const std::uint64_t seed = resolve_seed(a.seed);
  TestSettings settings;
  settings.alpha = a.alpha;
  settings.bootstrap = a.bootstrap;
  settings.restarts = a.restarts;
  settings.bootstrap_restarts = a.bootstrap_restarts;
  settings.permutations = a.perm;
  settings.bf_directions = a.directions;
  const TestReport report = run_test(spec, x, y, settings, RngStream(seed));

  std::vector<std::string> line = {"smoothtest", "test-multi", a.x, a.y, "--method", a.method};
  Json config;
  config["x"] = a.x;
  config["y"] = a.y;
  config["method"] = to_string(spec);
  config["p"] = x.dim();
  if (spec.method == Method::Ms) {
    config["basis"] = std::string(to_string(spec.basis));
    config["d"] = spec.d;
    config["B"] = a.bootstrap;
    config["restarts"] = a.restarts;
    config["bootstrap_restarts"] = a.bootstrap_restarts;
    line.insert(line.end(), {"--basis", std::string(to_string(spec.basis)), "--d", std::to_string(spec.d), "--B",
                             std::to_string(a.bootstrap), "--restarts", std::to_string(a.restarts),
                             "--bootstrap-restarts", std::to_string(a.bootstrap_restarts)});
  } else {
    config["perm"] = a.perm;
    config["directions"] = a.directions;
    line.insert(line.end(), {"--perm", std::to_string(a.perm), "--directions", std::to_string(a.directions)});
  }
  config["alpha"] = a.alpha;
  config["seed"] = seed;
  line.insert(line.end(), {"--alpha", number(a.alpha), "--seed", std::to_string(seed)});

  Json doc;
  doc["command"] = "test-multi";
  doc["version"] = SMOOTHTEST_VERSION;
  doc["config"] = config;
  doc["command_line"] = line;
  doc["result"] = report_json(report);
  emit(doc.dump(2) + "\n", a.out, out);
  return kExitOk;
}

struct SimulateArgs {
  std::string config, out = "results", seed, replicates;
  unsigned jobs = 1;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  std::ifstream in(a.config);
  if (!in) throw InputError("cannot open '" + a.config + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  SimulationPlan plan = parse_plan(buffer.str());
  plan.seed = resolve_seed(a.seed, plan.seed);
  if (!a.replicates.empty()) {
    plan.replicates = parse_integer<std::size_t>(a.replicates, "--replicates");
    if (plan.replicates < 1) throw DomainError("replicates must be >= 1");
  }
  if (a.jobs < 1) throw DomainError("jobs must be >= 1");

  const auto outputs = run_plan(plan, a.jobs);
  std::filesystem::create_directories(a.out);

  Json files = Json::array();
  for (const auto& s : outputs) {
    const std::filesystem::path path = std::filesystem::path(a.out) / s.file_name;
    emit(s.csv, path.string(), out);
    Json f;
    f["file"] = s.file_name;
    f["n"] = s.sizes.n;
    f["m"] = s.sizes.m;
    f["test"] = to_string(s.test);
    f["seed"] = *plan.seed;
    files.push_back(f);
    out << path.string() << "\n";
  }
  Json notes = Json::array();
  for (const auto& n : Generator(plan.x).notes()) notes.push_back("x: " + n);
  for (const auto& n : Generator(plan.y).notes()) notes.push_back("y: " + n);

  Json manifest;
  manifest["command"] = "simulate";
  manifest["version"] = SMOOTHTEST_VERSION;
  manifest["config_file"] = std::filesystem::path(a.config).filename().string();
  manifest["seed"] = *plan.seed;
  manifest["replicates"] = plan.replicates;
  manifest["resolved_config"] = render_plan(plan);
  manifest["generators"] = {{"x", to_string(plan.x)}, {"y", to_string(plan.y)}, {"notes", notes}};
  manifest["files"] = files;
  emit(manifest.dump(2) + "\n", (std::filesystem::path(a.out) / (plan.name + "_manifest.json")).string(), out);
  return kExitOk;
}

struct NullCdfArgs {
  std::string d = "1,4,8,12", grid = "0:5:101", out;
};

int cmd_nullcdf(const NullCdfArgs& a, std::ostream& out) {
  std::vector<int> ds;
  std::stringstream list(a.d);
  for (std::string item; std::getline(list, item, ',');) {
    const int d = parse_integer<int>(item, "--d");
    if (d < 1) throw DomainError("d must be >= 1");
    ds.push_back(d);
  }
  if (ds.empty()) throw InputError("--d: empty list");

  const auto c1 = a.grid.find(':');
  const auto c2 = a.grid.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) throw InputError("--grid expects lo:hi:count");
  auto real = [](const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
      throw InputError("--grid: bad number '" + s + "'");
    }
    return v;
  };
  const double lo = real(a.grid.substr(0, c1));
  const double hi = real(a.grid.substr(c1 + 1, c2 - c1 - 1));
  const auto count = parse_integer<std::size_t>(a.grid.substr(c2 + 1), "--grid count");
  if (count < 1) throw InputError("--grid count must be >= 1");
  if (lo < 0.0 || hi < lo) throw DomainError("--grid needs 0 <= lo <= hi");

  std::string csv = "t";
  for (int d : ds) csv += ",d" + std::to_string(d);
  csv += "\n";
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    csv += number(t);
    for (int d : ds) csv += "," + number(max_abs_gaussian_cdf(t, d));
    csv += "\n";
  }
  emit(csv, a.out, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-sample smooth tests and simulation harness", "smoothtest"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SMOOTHTEST_VERSION);

  UniArgs uni;
  auto* tu = app.add_subcommand("test-uni", "Univariate two-sample test on two one-column CSV files");
  tu->add_option("x", uni.x, "First sample (CSV)")->required();
  tu->add_option("y", uni.y, "Second sample (CSV)")->required();
  tu->add_option("--method", uni.method, "smooth | ks | cvm | bgx")->capture_default_str();
  tu->add_option("--basis", uni.basis, "trig | legendre (default trig; legendre for bgx)");
  tu->add_option("--d", uni.d, "Truncation d, or 'auto' for the Schwarz rule (default 10; 4 for bgx)");
  tu->add_option("--dmax", uni.dmax, "Largest d considered by --d auto")->capture_default_str();
  tu->add_option("--alpha", uni.alpha, "Significance level")->capture_default_str();
  tu->add_option("--perm", uni.perm, "Permutations for ks/cvm")->capture_default_str();
  tu->add_option("--seed", uni.seed, "Random seed (fallback: SMOOTHTEST_SEED)");
  tu->add_option("--out", uni.out, "Write the JSON report here instead of stdout");

  MultiArgs multi;
  auto* tm = app.add_subcommand("test-multi", "Multivariate two-sample test on two CSV files with p columns");
  tm->add_option("x", multi.x, "First sample (CSV)")->required();
  tm->add_option("y", multi.y, "Second sample (CSV)")->required();
  tm->add_option("--method", multi.method, "ms | bf")->capture_default_str();
  tm->add_option("--basis", multi.basis, "trig | legendre")->capture_default_str();
  tm->add_option("--d", multi.d, "Truncation d")->capture_default_str();
  tm->add_option("--alpha", multi.alpha, "Significance level")->capture_default_str();
  tm->add_option("--B", multi.bootstrap, "Multiplier bootstrap replicates")->capture_default_str();
  tm->add_option("--restarts", multi.restarts, "Sphere-search restarts for the statistic")->capture_default_str();
  tm->add_option("--bootstrap-restarts", multi.bootstrap_restarts, "Sphere-search restarts per bootstrap replicate")
      ->capture_default_str();
  tm->add_option("--perm", multi.perm, "Permutations for bf")->capture_default_str();
  tm->add_option("--directions", multi.directions, "Monte Carlo directions for bf")->capture_default_str();
  tm->add_option("--seed", multi.seed, "Random seed (fallback: SMOOTHTEST_SEED)");
  tm->add_option("--out", multi.out, "Write the JSON report here instead of stdout");

  SimulateArgs sim;
  auto* sc = app.add_subcommand("simulate", "Run a simulation plan and write CSV results");
  sc->add_option("config", sim.config, "Plan file (key = value lines)")->required();
  sc->add_option("--out", sim.out, "Output directory")->capture_default_str();
  sc->add_option("--jobs", sim.jobs, "Worker threads; results do not depend on it")->capture_default_str();
  sc->add_option("--seed", sim.seed, "Override the plan seed");
  sc->add_option("--replicates", sim.replicates, "Override the plan replicate count");

  NullCdfArgs cdf;
  auto* nc = app.add_subcommand("nullcdf", "Tabulate the null CDF (2 Phi(t) - 1)^d");
  nc->add_option("--d", cdf.d, "Comma-separated truncations")->capture_default_str();
  nc->add_option("--grid", cdf.grid, "lo:hi:count")->capture_default_str();
  nc->add_option("--out", cdf.out, "Write the CSV here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SMOOTHTEST_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*tu) return cmd_test_uni(uni, out);
    if (*tm) return cmd_test_multi(multi, out);
    if (*sc) return cmd_simulate(sim, out);
    if (*nc) return cmd_nullcdf(cdf, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace smoothtest::cli

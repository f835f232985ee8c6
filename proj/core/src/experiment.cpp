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

#include "smoothtest/experiment.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <variant>

#include "smoothtest/errors.hpp"
#include "smoothtest/multivariate.hpp"
#include "smoothtest/univariate.hpp"

namespace smoothtest {
namespace {

struct MethodName {
  Method method;
  std::string_view name;
};

constexpr MethodName kMethodNames[] = {
    {Method::Smooth, "smooth"}, {Method::Ks, "ks"}, {Method::Cvm, "cvm"},
    {Method::Bgx, "bgx"},       {Method::Ms, "ms"}, {Method::Bf, "bf"},
};

bool has_truncation(Method m) { return m == Method::Smooth || m == Method::Bgx || m == Method::Ms; }

int parse_positive_int(std::string_view token, std::string_view context) {
  int value = 0;
  for (char c : token) {
    if (c < '0' || c > '9' || value > 100000) {
      throw InputError("bad truncation '" + std::string(token) + "' in test '" + std::string(context) + "'");
    }
    value = value * 10 + (c - '0');
  }
  if (token.empty()) throw InputError("empty field in test '" + std::string(context) + "'");
  if (value < 1) throw DomainError("d must be >= 1");
  return value;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
// exception thrown by any worker is rethrown on the caller.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::jthread> threads;
  const unsigned width = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  threads.reserve(width);
  for (unsigned t = 0; t < width; ++t) threads.emplace_back(worker);
  threads.clear();
  if (error) std::rethrow_exception(error);
}

struct Replicator {
  const ExperimentConfig& cfg;
  Generator x_gen;
  Generator y_gen;

  explicit Replicator(const ExperimentConfig& c) : cfg(c), x_gen(c.x_spec), y_gen(c.y_spec) {
    if (x_gen.dim() != y_gen.dim()) throw DomainError("x and y generators differ in dimension");
    if (!is_multivariate(cfg.method.method) && x_gen.dim() != 1) {
      throw DomainError("test " + to_string(cfg.method) + " needs univariate data");
    }
  }

  TestReport operator()(std::size_t r) const {
    const RngStream stream = RngStream(cfg.seed).child(r);
    RngStream xs = stream.child(0), ys = stream.child(1);
    if (x_gen.dim() == 1 && !is_multivariate(cfg.method.method)) {
      const UniSample x = x_gen.sample_univariate(cfg.n, xs);
      const UniSample y = y_gen.sample_univariate(cfg.m, ys);
      return run_test(cfg.method, x, y, cfg.settings, stream.child(2));
    }
    const MultiSample x = x_gen.sample(cfg.n, xs);
    const MultiSample y = y_gen.sample(cfg.m, ys);
    return run_test(cfg.method, x, y, cfg.settings, stream.child(2));
  }
};

}  // namespace

MethodSpec parse_method(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  MethodSpec spec;
  bool found = false;
  for (const auto& entry : kMethodNames) {
    if (entry.name == parts[0]) {
      spec.method = entry.method;
      found = true;
    }
  }
  if (!found) throw InputError("unknown test '" + std::string(text) + "'");
  switch (spec.method) {
    case Method::Smooth: spec.basis = BasisKind::Trigonometric; spec.d = kDefaultTruncation; break;
    case Method::Bgx: spec.basis = BasisKind::Legendre; spec.d = kDefaultBgxTruncation; break;
    case Method::Ms: spec.basis = BasisKind::Trigonometric; spec.d = kDefaultMultivariateTruncation; break;
    default: break;
  }
  if (!has_truncation(spec.method)) {
    if (parts.size() > 1) throw InputError("test '" + std::string(parts[0]) + "' takes no options");
    return spec;
  }
  if (parts.size() > 3) throw InputError("too many fields in test '" + std::string(text) + "'");
  if (parts.size() == 2) {
    const char c = parts[1].empty() ? '\0' : parts[1][0];
    if (c >= '0' && c <= '9') {
      spec.d = parse_positive_int(parts[1], text);
    } else {
      spec.basis = parse_basis_kind(parts[1]);
    }
  } else if (parts.size() == 3) {
    spec.basis = parse_basis_kind(parts[1]);
    spec.d = parse_positive_int(parts[2], text);
  }
  return spec;
}

std::string to_string(const MethodSpec& spec) {
  std::string out;
  for (const auto& entry : kMethodNames)
    if (entry.method == spec.method) out = entry.name;
  if (has_truncation(spec.method)) {
    out += ":" + std::string(to_string(spec.basis)) + ":" + std::to_string(spec.d);
  }
  return out;
}

bool is_multivariate(Method method) noexcept { return method == Method::Ms || method == Method::Bf; }

void TestSettings::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  if (permutations < 1) throw DomainError("permutation count must be >= 1");
  if (bootstrap < 20) throw DomainError("bootstrap replicates must be >= 20");
  if (restarts < 1 || bootstrap_restarts < 1) throw DomainError("restarts must be >= 1");
  if (bf_directions < 1) throw DomainError("bf direction count must be >= 1");
}

TestReport run_test(const MethodSpec& method, const UniSample& x, const UniSample& y,
                    const TestSettings& settings, const RngStream& stream) {
  settings.validate();
  RngStream s = stream;
  switch (method.method) {
    case Method::Smooth:
      return smooth_test(x, y, BasisSystem(method.basis, method.d), settings.alpha);
    case Method::Bgx:
      return bgx_test(x, y, BasisSystem(method.basis, method.d), settings.alpha);
    case Method::Ks:
      return ks_test(x, y, settings.alpha, settings.permutations, s);
    case Method::Cvm:
      return cvm_test(x, y, settings.alpha, settings.permutations, s);
    case Method::Ms:
    case Method::Bf:
      return run_test(method, MultiSample::from_univariate(x), MultiSample::from_univariate(y), settings,
                      stream);
  }
  throw std::logic_error("unknown method");
}

TestReport run_test(const MethodSpec& method, const MultiSample& x, const MultiSample& y,
                    const TestSettings& settings, const RngStream& stream) {
  settings.validate();
  if (x.dim() != y.dim()) throw DomainError("samples differ in dimension");
  if (method.method == Method::Ms) {
    MsConfig cfg;
    cfg.search.restarts = settings.restarts;
    cfg.bootstrap_search.restarts = settings.bootstrap_restarts;
    cfg.bootstrap_replicates = settings.bootstrap;
    return ms_test(x, y, BasisSystem(method.basis, method.d), settings.alpha, cfg, stream);
  }
  if (method.method == Method::Bf) {
    return bf_test(x, y, settings.bf_directions, settings.alpha, settings.permutations, stream);
  }
  if (x.dim() != 1) throw DomainError("test " + to_string(method) + " needs univariate data");
  return run_test(method, x.column(0), y.column(0), settings, stream);
}

void ExperimentConfig::validate() const {
  settings.validate();
  if (replicates < 1) throw DomainError("replicates must be >= 1");
  if (n < 2 || m < 2) throw DomainError("sample sizes must be >= 2");
  if (jobs < 1) throw DomainError("jobs must be >= 1");
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const Replicator replicate(cfg);
  std::vector<unsigned char> rejected(cfg.replicates, 0);
  parallel_for(cfg.replicates, cfg.jobs, [&](std::size_t r) { rejected[r] = replicate(r).reject ? 1 : 0; });
  ExperimentResult result;
  result.replicates = cfg.replicates;
  for (unsigned char v : rejected) result.rejections += v;
  result.rate = static_cast<double>(result.rejections) / static_cast<double>(result.replicates);
  result.se = std::sqrt(result.rate * (1.0 - result.rate) / static_cast<double>(result.replicates));
  return result;
}

ExperimentResult size_experiment(const ExperimentConfig& cfg) {
  if (to_string(cfg.x_spec) != to_string(cfg.y_spec)) {
    throw DomainError("size experiment needs identical x and y laws, got " + to_string(cfg.x_spec) + " and " +
                      to_string(cfg.y_spec));
  }
  return run_experiment(cfg);
}

std::vector<double> replicate_statistics(const ExperimentConfig& cfg) {
  cfg.validate();
  const Replicator replicate(cfg);
  std::vector<double> values(cfg.replicates);
  parallel_for(cfg.replicates, cfg.jobs, [&](std::size_t r) { values[r] = replicate(r).statistic; });
  return values;
}

std::vector<PowerPoint> power_curve(const ExperimentConfig& cfg, const std::vector<double>& grid) {
  const auto* model = std::get_if<ExampleModel>(&cfg.y_spec);
  if (model == nullptr) throw DomainError("power curves need an example alternative");
  std::vector<PowerPoint> rows;
  rows.reserve(grid.size());
  for (double param : grid) {
    ExperimentConfig point = cfg;
    ExampleModel alt = *model;
    alt.param = param;
    point.y_spec = alt;
    rows.push_back({param, run_experiment(point)});
  }
  return rows;
}

}  // namespace smoothtest

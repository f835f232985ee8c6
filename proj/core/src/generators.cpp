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

#include "smoothtest/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "smoothtest/errors.hpp"
#include "smoothtest/numerics.hpp"

namespace smoothtest {
namespace {

constexpr double kPi = std::numbers::pi;

struct FamilyInfo {
  NullFamily family;
  std::string_view name;
  std::size_t arity;
};

constexpr FamilyInfo kFamilies[] = {
    {NullFamily::Uniform, "uniform", 2},  {NullFamily::Normal, "normal", 2},
    {NullFamily::Logistic, "logistic", 2}, {NullFamily::Gamma, "gamma", 2},
    {NullFamily::Pareto, "pareto", 3},    {NullFamily::Stable, "stable", 4},
    {NullFamily::StudentT, "t", 1},       {NullFamily::LogNormal, "lognormal", 2},
};

const FamilyInfo& family_info(NullFamily f) {
  for (const auto& info : kFamilies)
    if (info.family == f) return info;
  throw std::logic_error("unknown null family");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_number(std::string_view token, std::string_view context) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw InputError("bad number '" + std::string(token) + "' in generator '" +
                     std::string(context) + "'");
  }
  return value;
}

std::string join_numbers(const std::vector<double>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += format_real(v[i]);
  }
  return out;
}

void check_range(double v, double lo, double hi, const char* what) {
  if (!(v >= lo && v <= hi)) {
    throw DomainError(std::string(what) + " = " + format_real(v) + " outside [" +
                      format_real(lo) + ", " + format_real(hi) + "]");
  }
}

// Univariate alternative densities used by examples 1, 2, 4, 5 (and 6, 7
// through their marginals). `z` is the normalizer where one is needed.
double example_density(int id, double param, double z, double x) {
  switch (id) {
    case 1: {
      if (x <= -1.0 || x >= 1.0) return 0.0;
      const double mu = param;
      if (mu > 0.0 && std::abs(x) < mu) return 0.5 + 2.0 * x * (mu - std::abs(x)) / (mu * mu);
      return 0.5;
    }
    case 2:
      if (x <= -1.0 || x >= 1.0) return 0.0;
      return 0.5 * (1.0 + std::sin(2.0 * kPi * param * x));
    case 4:
      if (x <= 0.0 || x >= 1.0) return 0.0;
      return std::exp(param * std::sin(5.0 * kPi * x)) / z;
    case 5:
      if (x <= 0.0 || x >= 1.0) return 0.0;
      return std::max(0.0, 1.0 + param * std::cos(5.0 * kPi * x)) / z;
    default:
      throw std::logic_error("no univariate density for example " + std::to_string(id));
  }
}

int marginal_id(int id) { return id == 6 ? 1 : id == 7 ? 4 : id; }

std::pair<double, double> example_interval(int id) {
  return marginal_id(id) <= 2 ? std::pair{-1.0, 1.0} : std::pair{0.0, 1.0};
}

std::vector<double> cholesky(const std::vector<double>& a, std::size_t p) {
  std::vector<double> l(p * p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = a[i * p + j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i * p + k] * l[j * p + k];
      if (i == j) {
        if (!(s > 0.0)) throw DomainError("covariance matrix is not positive definite");
        l[i * p + i] = std::sqrt(s);
      } else {
        l[i * p + j] = s / l[j * p + j];
      }
    }
  }
  return l;
}

double stable_draw(RngStream& s, double alpha, double beta, double scale, double loc) {
  const double v = kPi * (s.uniform() - 0.5);
  double w = s.exponential();
  while (w == 0.0) w = s.exponential();
  if (alpha == 1.0) {
    const double h = kPi / 2.0 + beta * v;
    const double x = (2.0 / kPi) * (h * std::tan(v) - beta * std::log((kPi / 2.0) * w * std::cos(v) / h));
    return scale * x + (2.0 / kPi) * beta * scale * std::log(scale) + loc;
  }
  const double t = beta * std::tan(kPi * alpha / 2.0);
  const double b = std::atan(t) / alpha;
  const double sfac = std::pow(1.0 + t * t, 1.0 / (2.0 * alpha));
  const double x = sfac * std::sin(alpha * (v + b)) / std::pow(std::cos(v), 1.0 / alpha) *
                   std::pow(std::cos(v - alpha * (v + b)) / w, (1.0 - alpha) / alpha);
  return scale * x + loc;
}

double chi2_over_dof(RngStream& s, double dof) { return 2.0 * s.gamma(dof / 2.0) / dof; }

}  // namespace

GeneratorSpec parse_generator(std::string_view text) {
  const std::string_view full = trim(text);
  const std::size_t open = full.find('(');
  if (open == std::string_view::npos || full.back() != ')') {
    throw InputError("generator '" + std::string(full) + "' must look like name(args)");
  }
  const std::string_view name = trim(full.substr(0, open));
  const std::string_view inner = full.substr(open + 1, full.size() - open - 2);

  if (name == "example") {
    const auto parts = split(inner, ',');
    if (parts.size() < 2 || parts.size() > 3) {
      throw InputError("example(id,param[,clipped]) expected, got '" + std::string(full) + "'");
    }
    ExampleModel m;
    const double id = parse_number(parts[0], full);
    if (id != std::floor(id) || id < 1 || id > 9) throw DomainError("example id must be 1..9");
    m.id = static_cast<int>(id);
    m.param = parse_number(parts[1], full);
    if (parts.size() == 3) {
      if (parts[2] != "clipped") throw InputError("unknown example flag '" + std::string(parts[2]) + "'");
      m.allow_clipped = true;
    }
    return m;
  }
  if (name == "smoothalt") {
    const std::size_t semi = inner.find(';');
    if (semi == std::string_view::npos) {
      throw InputError("smoothalt(basis;theta1,...) expected, got '" + std::string(full) + "'");
    }
    SmoothAltModel m;
    m.kind = parse_basis_kind(trim(inner.substr(0, semi)));
    for (auto tok : split(inner.substr(semi + 1), ',')) m.theta.push_back(parse_number(tok, full));
    return m;
  }
  if (name == "mvnormal" || name == "mvt") {
    const auto parts = split(inner, ',');
    const std::size_t fixed = name == "mvt" ? 2 : 1;
    if (parts.size() < fixed || parts.size() > fixed + 1) {
      throw InputError("malformed multivariate generator '" + std::string(full) + "'");
    }
    MvModel m;
    const double p = parse_number(parts[0], full);
    if (p != std::floor(p) || p < 1) throw DomainError("dimension must be a positive integer");
    m.dim = static_cast<std::size_t>(p);
    if (name == "mvt") m.dof = parse_number(parts[1], full);
    if (parts.size() == fixed + 1) {
      const std::string_view cov = parts[fixed];
      if (cov == "identity") {
        m.covariance = Covariance::Identity;
      } else if (cov.starts_with("ar1")) {
        m.covariance = Covariance::Ar1;
        if (cov.size() > 3) {
          if (cov[3] != ':') throw InputError("expected ar1:rho, got '" + std::string(cov) + "'");
          m.rho = parse_number(cov.substr(4), full);
        }
      } else {
        throw InputError("unknown covariance '" + std::string(cov) + "'");
      }
    }
    return m;
  }
  for (const auto& info : kFamilies) {
    if (info.name != name) continue;
    NullModel m;
    m.family = info.family;
    for (auto tok : split(inner, ',')) m.params.push_back(parse_number(tok, full));
    if (m.params.size() != info.arity) {
      throw InputError(std::string(info.name) + " takes " + std::to_string(info.arity) +
                       " parameters, got '" + std::string(full) + "'");
    }
    return m;
  }
  throw InputError("unknown generator '" + std::string(name) + "'");
}

std::string to_string(const GeneratorSpec& spec) {
  struct Visitor {
    std::string operator()(const NullModel& m) const {
      return std::string(family_info(m.family).name) + "(" + join_numbers(m.params) + ")";
    }
    std::string operator()(const ExampleModel& m) const {
      return "example(" + std::to_string(m.id) + "," + format_real(m.param) +
             (m.allow_clipped ? ",clipped)" : ")");
    }
    std::string operator()(const SmoothAltModel& m) const {
      return "smoothalt(" + std::string(smoothtest::to_string(m.kind)) + ";" + join_numbers(m.theta) + ")";
    }
    std::string operator()(const MvModel& m) const {
      std::string out = m.dof > 0.0 ? "mvt(" : "mvnormal(";
      out += std::to_string(m.dim);
      if (m.dof > 0.0) out += "," + format_real(m.dof);
      out += m.covariance == Covariance::Identity ? ",identity)" : ",ar1:" + format_real(m.rho) + ")";
      return out;
    }
  };
  return std::visit(Visitor{}, spec);
}

GeneratorSpec example_baseline(int id) {
  if (id == 2) return NullModel{NullFamily::Uniform, {-1.0, 1.0}};
  if (id < 1 || id > 9) throw DomainError("example id must be 1..9");
  return ExampleModel{id, 0.0, false};
}

std::pair<double, double> example_param_range(int id) {
  switch (id) {
    case 1: case 6: return {0.0, 1.0};
    case 2: return {0.5, 5.0};
    case 3: return {-1.0, 1.0};
    case 4: case 7: return {0.0, 2.0};
    case 5: return {0.0, 1.0};
    case 8: case 9: return {0.0, 0.5};
    default: throw DomainError("example id must be 1..9");
  }
}

Generator::Generator(GeneratorSpec spec) : spec_(std::move(spec)) {
  if (const auto* m = std::get_if<NullModel>(&spec_)) {
    const auto& p = m->params;
    if (p.size() != family_info(m->family).arity) throw DomainError("wrong number of parameters");
    for (double v : p)
      if (!std::isfinite(v)) throw DomainError("generator parameters must be finite");
    switch (m->family) {
      case NullFamily::Uniform:
        if (!(p[0] < p[1])) throw DomainError("uniform(a,b) needs a < b");
        break;
      case NullFamily::Normal: case NullFamily::Logistic: case NullFamily::LogNormal:
        if (!(p[1] > 0.0)) throw DomainError("scale parameter must be positive");
        break;
      case NullFamily::Gamma:
        if (!(p[0] > 0.0 && p[1] > 0.0)) throw DomainError("gamma shape and scale must be positive");
        break;
      case NullFamily::Pareto:
        if (!(p[0] > 0.0 && p[1] > 0.0)) throw DomainError("pareto shape and scale must be positive");
        break;
      case NullFamily::Stable:
        if (!(p[0] > 0.0 && p[0] <= 2.0)) throw DomainError("stable alpha must lie in (0, 2]");
        if (!(p[1] >= -1.0 && p[1] <= 1.0)) throw DomainError("stable beta must lie in [-1, 1]");
        if (!(p[2] > 0.0)) throw DomainError("stable scale must be positive");
        break;
      case NullFamily::StudentT:
        if (!(p[0] > 0.0)) throw DomainError("t degrees of freedom must be positive");
        break;
    }
  } else if (const auto* e = std::get_if<ExampleModel>(&spec_)) {
    auto [lo, hi] = example_param_range(e->id);
    if (e->id == 5 && e->allow_clipped) hi = 2.0;
    check_range(e->param, lo, hi, ("example " + std::to_string(e->id) + " parameter").c_str());
    const int base = marginal_id(e->id);
    if (e->id >= 6) dim_ = e->id <= 7 ? 3 : 5;
    const double c = e->param;
    switch (base) {
      case 1: case 2:
        envelope_ = 1.0;
        break;
      case 3:
        acceptance_ = 1.0 / (1.0 + std::abs(c));
        break;
      case 4:
        normalizer_ = c == 0.0 ? 1.0 : integrate([c](double x) { return std::exp(c * std::sin(5.0 * kPi * x)); }, 0.0, 1.0);
        envelope_ = std::exp(std::abs(c)) / normalizer_;
        break;
      case 5:
        // Zero mean of cos(5 pi x) over (0, 1) keeps the normalizer at 1
        // unless clipping is active.
        normalizer_ = c <= 1.0 ? 1.0 : integrate([c](double x) { return std::max(0.0, 1.0 + c * std::cos(5.0 * kPi * x)); }, 0.0, 1.0);
        envelope_ = (1.0 + c) / normalizer_;
        break;
      default:
        break;
    }
    if (base == 1 || base == 2 || base == 4 || base == 5) {
      const auto [a, b] = example_interval(base);
      acceptance_ = 1.0 / (envelope_ * (b - a));
    }
  } else if (const auto* s = std::get_if<SmoothAltModel>(&spec_)) {
    if (s->theta.empty()) throw DomainError("smooth alternative needs at least one coefficient");
    for (double v : s->theta)
      if (!std::isfinite(v)) throw DomainError("theta must be finite");
    normalizer_ = integrate([this](double z) { return unnormalized(z); }, 0.0, 1.0);
    constexpr int kGrid = 10000;
    double sup = 0.0;
    for (int i = 0; i <= kGrid; ++i) sup = std::max(sup, unnormalized(static_cast<double>(i) / kGrid));
    envelope_ = 1.05 * sup;
    acceptance_ = normalizer_ / envelope_;
  } else {
    const auto& mv = std::get<MvModel>(spec_);
    if (mv.dim < 1) throw DomainError("dimension must be >= 1");
    if (mv.dof < 0.0 || !std::isfinite(mv.dof)) throw DomainError("degrees of freedom must be positive");
    if (mv.covariance == Covariance::Ar1 && !(mv.rho > -1.0 && mv.rho < 1.0)) {
      throw DomainError("AR(1) correlation must lie in (-1, 1)");
    }
    dim_ = mv.dim;
    std::vector<double> sigma(dim_ * dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        sigma[i * dim_ + j] = mv.covariance == Covariance::Identity
                                  ? (i == j ? 1.0 : 0.0)
                                  : std::pow(mv.rho, static_cast<double>(i > j ? i - j : j - i));
    cholesky_ = cholesky(sigma, dim_);
  }
}

double Generator::unnormalized(double x) const {
  if (const auto* s = std::get_if<SmoothAltModel>(&spec_)) {
    const BasisSystem basis(s->kind, static_cast<int>(s->theta.size()));
    double e = 0.0;
    for (int k = 1; k <= basis.size(); ++k) e += s->theta[k - 1] * basis.eval(k, x);
    return std::exp(e);
  }
  const auto& e = std::get<ExampleModel>(spec_);
  return example_density(marginal_id(e.id), e.param, normalizer_, x);
}

bool Generator::has_density() const noexcept {
  if (dim_ != 1) return false;
  if (const auto* m = std::get_if<NullModel>(&spec_)) return m->family != NullFamily::Stable;
  return !std::holds_alternative<MvModel>(spec_);
}

double Generator::density(double x) const {
  if (!has_density()) throw DomainError("no closed-form density for " + to_string(spec_));
  if (const auto* m = std::get_if<NullModel>(&spec_)) {
    const auto& p = m->params;
    switch (m->family) {
      case NullFamily::Uniform:
        return x > p[0] && x < p[1] ? 1.0 / (p[1] - p[0]) : 0.0;
      case NullFamily::Normal:
        return normal_pdf((x - p[0]) / p[1]) / p[1];
      case NullFamily::Logistic: {
        const double z = std::exp(-std::abs(x - p[0]) / p[1]);
        return z / (p[1] * (1.0 + z) * (1.0 + z));
      }
      case NullFamily::Gamma:
        if (x <= 0.0) return 0.0;
        return std::exp((p[0] - 1.0) * std::log(x / p[1]) - x / p[1] - std::lgamma(p[0])) / p[1];
      case NullFamily::Pareto: {
        const double y = x - p[2] + p[1];
        if (y <= p[1]) return 0.0;
        return p[0] * std::pow(p[1], p[0]) / std::pow(y, p[0] + 1.0);
      }
      case NullFamily::StudentT: {
        const double v = p[0];
        return std::exp(std::lgamma((v + 1.0) / 2.0) - std::lgamma(v / 2.0) -
                        0.5 * std::log(v * kPi) - (v + 1.0) / 2.0 * std::log1p(x * x / v));
      }
      case NullFamily::LogNormal:
        if (x <= 0.0) return 0.0;
        return normal_pdf((std::log(x) - p[0]) / p[1]) / (p[1] * x);
      case NullFamily::Stable:
        break;
    }
    throw std::logic_error("unreachable");
  }
  if (std::holds_alternative<SmoothAltModel>(spec_)) {
    if (x < 0.0 || x > 1.0) return 0.0;
    return unnormalized(x) / normalizer_;
  }
  const auto& e = std::get<ExampleModel>(spec_);
  if (e.id == 3) {
    if (x <= 0.0) return 0.0;
    const double lx = std::log(x);
    return normal_pdf(lx) / x * (1.0 + e.param * std::sin(2.0 * kPi * lx));
  }
  return unnormalized(x);
}

std::pair<double, double> Generator::support() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (const auto* m = std::get_if<NullModel>(&spec_)) {
    const auto& p = m->params;
    switch (m->family) {
      case NullFamily::Uniform: return {p[0], p[1]};
      case NullFamily::Gamma: case NullFamily::LogNormal: return {0.0, inf};
      case NullFamily::Pareto: return {p[2], inf};
      case NullFamily::Stable:
        if (p[0] < 1.0 && std::abs(p[1]) == 1.0) return p[1] > 0 ? std::pair{p[3], inf} : std::pair{-inf, p[3]};
        return {-inf, inf};
      default: return {-inf, inf};
    }
  }
  if (std::holds_alternative<SmoothAltModel>(spec_)) return {0.0, 1.0};
  if (const auto* e = std::get_if<ExampleModel>(&spec_)) {
    if (e->id == 3) return {0.0, inf};
    if (e->id <= 7) return example_interval(e->id);
  }
  return {-inf, inf};
}

double Generator::draw_bounded(RngStream& stream, double lo, double hi) const {
  for (;;) {
    const double x = lo + (hi - lo) * stream.uniform();
    const double g = unnormalized(x);
    if (g > envelope_) {
      throw std::logic_error("density " + format_real(g) + " exceeds rejection envelope " +
                             format_real(envelope_) + " at x = " + format_real(x));
    }
    if (stream.uniform() * envelope_ <= g) return x;
  }
}

double Generator::draw(RngStream& s) const {
  if (const auto* m = std::get_if<NullModel>(&spec_)) {
    const auto& p = m->params;
    switch (m->family) {
      case NullFamily::Uniform: return p[0] + (p[1] - p[0]) * s.uniform();
      case NullFamily::Normal: return p[0] + p[1] * s.gaussian();
      case NullFamily::Logistic: {
        double u = s.uniform();
        while (u == 0.0) u = s.uniform();
        return p[0] + p[1] * std::log(u / (1.0 - u));
      }
      case NullFamily::Gamma: return p[1] * s.gamma(p[0]);
      case NullFamily::Pareto: {
        const double u = s.uniform();
        return p[2] - p[1] + p[1] * std::pow(1.0 - u, -1.0 / p[0]);
      }
      case NullFamily::Stable: return stable_draw(s, p[0], p[1], p[2], p[3]);
      case NullFamily::StudentT: return s.gaussian() / std::sqrt(chi2_over_dof(s, p[0]));
      case NullFamily::LogNormal: return std::exp(p[0] + p[1] * s.gaussian());
    }
    throw std::logic_error("unreachable");
  }
  if (std::holds_alternative<SmoothAltModel>(spec_)) {
    for (;;) {
      const double z = s.uniform();
      const double g = unnormalized(z);
      if (g > envelope_) {
        throw std::logic_error("smooth alternative density " + format_real(g) +
                               " exceeds envelope " + format_real(envelope_) + " at z = " + format_real(z));
      }
      if (s.uniform() * envelope_ <= g) return z;
    }
  }
  const auto& e = std::get<ExampleModel>(spec_);
  const int base = marginal_id(e.id);
  if (base == 3) {
    const double scale = 1.0 + std::abs(e.param);
    for (;;) {
      const double w = s.gaussian();
      if (s.uniform() * scale <= 1.0 + e.param * std::sin(2.0 * kPi * w)) return std::exp(w);
    }
  }
  const auto [lo, hi] = example_interval(base);
  if ((base == 1 || base == 4) && e.param == 0.0) return lo + (hi - lo) * s.uniform();
  return draw_bounded(s, lo, hi);
}

void Generator::draw_row(RngStream& s, double* out) const {
  if (const auto* mv = std::get_if<MvModel>(&spec_)) {
    std::vector<double> z(dim_);
    for (auto& v : z) v = s.gaussian();
    const double w = mv->dof > 0.0 ? 1.0 / std::sqrt(chi2_over_dof(s, mv->dof)) : 1.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k <= i; ++k) acc += cholesky_[i * dim_ + k] * z[k];
      out[i] = w * acc;
    }
    return;
  }
  const auto* e = std::get_if<ExampleModel>(&spec_);
  if (e != nullptr && (e->id == 6 || e->id == 7)) {
    out[0] = draw(s);
    out[1] = draw(s);
    out[2] = 0.3 * out[0] + 0.7 * out[1];
    return;
  }
  if (e != nullptr && (e->id == 8 || e->id == 9)) {
    double z[5];
    for (double& v : z) v = s.gaussian();
    if (e->id == 9) {
      const double w = 1.0 / std::sqrt(chi2_over_dof(s, 4.0));
      for (double& v : z) v *= w;
    }
    const double a = std::sqrt(1.0 - e->param), b = std::sqrt(e->param);
    out[0] = a * z[0] + b * z[1];
    out[1] = b * z[0] + a * z[1];
    for (int i = 2; i < 5; ++i) out[i] = z[i];
    return;
  }
  out[0] = draw(s);
}

MultiSample Generator::sample(std::size_t n, RngStream& stream) const {
  if (n == 0) throw DomainError("sample size must be positive");
  std::vector<double> data(n * dim_);
  for (std::size_t i = 0; i < n; ++i) draw_row(stream, data.data() + i * dim_);
  return MultiSample(dim_, std::move(data));
}

UniSample Generator::sample_univariate(std::size_t n, RngStream& stream) const {
  if (dim_ != 1) throw DomainError("generator " + to_string(spec_) + " is multivariate");
  if (n == 0) throw DomainError("sample size must be positive");
  std::vector<double> data(n);
  for (auto& v : data) v = draw(stream);
  return UniSample(std::move(data));
}

std::vector<std::string> Generator::notes() const {
  std::vector<std::string> out;
  if (const auto* m = std::get_if<NullModel>(&spec_)) {
    if (m->family == NullFamily::Pareto)
      out.emplace_back("pareto(shape,scale,location): CDF 1-(scale/(x-location+scale))^shape on x > location");
    if (m->family == NullFamily::Stable)
      out.emplace_back("stable(alpha,beta,scale,location): Chambers-Mallows-Stuck parameterization");
    if (m->family == NullFamily::Gamma) out.emplace_back("gamma(shape,scale)");
  } else if (const auto* e = std::get_if<ExampleModel>(&spec_)) {
    const int base = marginal_id(e->id);
    if (base == 4) out.emplace_back("example 4 density exp(c sin(5 pi x)) normalized by Z(c) = " + format_real(normalizer_));
    if (e->id == 5 && e->param > 1.0)
      out.emplace_back("example 5 with c > 1: density max(0, 1 + c cos(5 pi x)) renormalized by " + format_real(normalizer_));
  } else if (const auto* mv = std::get_if<MvModel>(&spec_)) {
    if (mv->covariance == Covariance::Ar1)
      out.emplace_back("covariance AR(1): Sigma_ij = " + format_real(mv->rho) + "^|i-j|");
  }
  if (acceptance_ < 1.0) out.emplace_back("rejection sampler acceptance " + format_real(acceptance_));
  return out;
}

}  // namespace smoothtest

// Copyright 2026 The ekbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ekbound/fuzz.hpp"

#include <cmath>
#include <stdexcept>

#include "ekbound/error.hpp"

namespace ekbound {

namespace {

constexpr double kGrid = 1024.0;
constexpr int kMaxAttempts = 1000;

double ceil_grid(double x) { return std::ceil(x * kGrid) / kGrid; }
double floor_grid(double x) { return std::floor(x * kGrid) / kGrid; }

}  // namespace

std::string_view to_string(LeadingSign s) noexcept {
  switch (s) {
    case LeadingSign::Any: return "any";
    case LeadingSign::Positive: return "positive";
    case LeadingSign::Negative: return "negative";
  }
  return "any";
}

void validate(const FuzzConfig& c) {
  if (c.min_degree < 2 || c.max_degree > 40 || c.min_degree > c.max_degree) {
    throw Error(ErrorCode::BadParam, "degree range must satisfy 2 <= min <= max <= 40");
  }
  if (!(c.scale > 0.0) || !std::isfinite(c.scale)) {
    throw Error(ErrorCode::BadParam, "scale must be a positive finite number");
  }
  const bool positive_only = c.theorem == Theorem::A || c.theorem == Theorem::C ||
                             c.theorem == Theorem::D || c.theorem == Theorem::Cor1;
  if (positive_only && c.leading == LeadingSign::Negative) {
    throw Error(ErrorCode::BadParam, "theorem " + std::string(theorem_id(c.theorem)) +
                                         " instances are generated with a_n > 0 only");
  }
  if (!(c.solver.tol > 0.0) || c.solver.max_iter < 1) {
    throw Error(ErrorCode::BadParam, "solver tolerance must be > 0 and max_iter >= 1");
  }
}

InstanceGenerator::InstanceGenerator(const FuzzConfig& config)
    : config_(config), rng_(config.seed) {
  validate(config_);
}

double InstanceGenerator::unit() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

int InstanceGenerator::int_in(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

double InstanceGenerator::grid(double x) const { return std::round(x * kGrid) / kGrid; }

double InstanceGenerator::value() { return grid(config_.scale * (2.0 * unit() - 1.0)); }

double InstanceGenerator::magnitude() {
  return std::max(grid(config_.scale * unit()), 1.0 / kGrid);
}

double InstanceGenerator::step() {
  if (unit() < 0.1) return 0.0;
  return grid(0.5 * config_.scale * unit());
}

double InstanceGenerator::slack() {
  if (unit() < 0.2) return 0.0;
  return grid(config_.scale * unit());
}

double InstanceGenerator::lead_sign() {
  switch (config_.leading) {
    case LeadingSign::Positive: return 1.0;
    case LeadingSign::Negative: return -1.0;
    case LeadingSign::Any: break;
  }
  return unit() < 0.5 ? -1.0 : 1.0;
}

double InstanceGenerator::rho() { return int_in(1, 16) / 16.0; }

double InstanceGenerator::k() { return 1.0 + int_in(0, 16) / 8.0; }

int InstanceGenerator::degree() { return int_in(config_.min_degree, config_.max_degree); }

// a_1..a_last rising to a_lambda and falling after it; a[0] is left at 0.
std::vector<double> InstanceGenerator::descending_from_peak(int last, int lambda) {
  std::vector<double> a(static_cast<std::size_t>(last) + 1, 0.0);
  const auto peak = static_cast<std::size_t>(lambda);
  a[peak] = value();
  for (std::size_t j = peak; j-- > 1;) a[j] = a[j + 1] - step();
  for (std::size_t j = peak + 1; j < a.size(); ++j) a[j] = a[j - 1] - step();
  return a;
}

// Adds a constant to a[from..] so that a.back() gets the configured sign.
void InstanceGenerator::shift_to_sign(std::vector<double>& a, std::size_t from) {
  const double sign = lead_sign();
  if (a.back() * sign > 0.0) return;
  const double c = sign * magnitude() - a.back();
  for (std::size_t i = from; i < a.size(); ++i) a[i] += c;
}

FuzzInstance InstanceGenerator::try_next() {
  const int n = degree();
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<double> a(size, 0.0);
  const auto ascend = [&](std::size_t from, std::size_t to) {
    for (std::size_t j = from; j <= to; ++j) a[j] = a[j - 1] + step();
  };

  switch (config_.theorem) {
    case Theorem::A: {
      a[0] = magnitude();
      ascend(1, size - 1);
      return {Polynomial(a), ParamsA{}};
    }
    case Theorem::B: {
      a[0] = value();
      ascend(1, size - 1);
      shift_to_sign(a, 0);
      return {Polynomial(a), ParamsB{}};
    }
    case Theorem::C: {
      const double kk = k();
      a[0] = magnitude();
      ascend(1, size - 2);
      a.back() = ceil_grid(a[size - 2] / kk) + slack();
      return {Polynomial(a), ParamsC{kk}};
    }
    case Theorem::D:
    case Theorem::Cor1: {
      const double kk = k();
      const double r = rho();
      if (config_.theorem == Theorem::D) {
        a[0] = unit() < 0.1 ? 0.0 : magnitude();
      } else {
        a[0] = value();
      }
      a[1] = r * a[0] + step();
      ascend(2, size - 2);
      a.back() = ceil_grid(a[size - 2] / kk) + slack();
      if (!(a.back() > 0.0)) a.back() = magnitude();
      if (config_.theorem == Theorem::D) return {Polynomial(a), ParamsD{kk, r}};
      return {Polynomial(a), ParamsCor1{kk, r}};
    }
    case Theorem::E: {
      const double r = rho();
      const int lambda = int_in(1, n - 1);
      a = descending_from_peak(n, lambda);
      shift_to_sign(a, 1);
      a[0] = value();
      if (r * a[0] > a[1]) a[0] = floor_grid(a[1] / r);
      return {Polynomial(a), ParamsE{r, lambda}};
    }
    case Theorem::T1: {
      a[0] = value();
      a[1] = value();
      ascend(2, size - 2);
      a.back() = lead_sign() * magnitude();
      const double alpha = (a[size - 2] - a.back()) + slack();
      const double beta = (a[0] - a[1]) + slack();
      return {Polynomial(a), ParamsT1{alpha, beta}};
    }
    case Theorem::T2: {
      const int lambda = int_in(1, n - 1);
      a = descending_from_peak(n, lambda);
      shift_to_sign(a, 1);
      a[0] = value();
      const double s = (a[0] - a[1]) + slack();
      return {Polynomial(a), ParamsT2{s, lambda}};
    }
    case Theorem::T3: {
      const int lambda = int_in(1, n - 1);
      a = descending_from_peak(n - 1, lambda);
      a.push_back(lead_sign() * magnitude());
      a[0] = value();
      const double s = (a[0] - a[1]) + slack();
      const double t = (a[size - 2] - a.back()) - slack();
      return {Polynomial(a), ParamsT3{s, t, lambda}};
    }
  }
  throw std::logic_error("unhandled theorem in instance generator");
}

FuzzInstance InstanceGenerator::next() {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    try {
      auto inst = try_next();
      if (hypothesis(inst.polynomial, inst.params)) return inst;
    } catch (const Error&) {
      // a_n rounded to zero; draw again
    }
  }
  throw std::logic_error("instance generator could not satisfy the hypothesis of theorem " +
                         std::string(theorem_id(config_.theorem)));
}

FuzzSummary run_fuzz(const FuzzConfig& config) {
  FuzzSummary summary;
  summary.config = config;
  InstanceGenerator gen(config);
  for (std::uint64_t i = 0; i < config.count; ++i) {
    FuzzInstance inst = gen.next();
    const Disk d = bound(inst.polynomial, inst.params);
    const RootSet rs = find_roots(inst.polynomial, config.solver);
    const Verdict v = containment(rs, d);
    switch (v.status) {
      case Containment::Contained:
        ++summary.passed;
        break;
      case Containment::Inconclusive:
      case Containment::Unchecked:
        ++summary.inconclusive;
        summary.inconclusive_indices.push_back(i);
        break;
      case Containment::Failed: {
        const bool flagged = inst.polynomial.leading() < 0.0;
        ++summary.failed;
        if (flagged) ++summary.failed_flagged;
        summary.failures.push_back(
            FuzzFailure{i, std::move(inst), d, rs.roots[*v.worst_root], v.excess, flagged});
        break;
      }
    }
  }
  return summary;
}

Json fuzz_to_json(const FuzzSummary& s) {
  Json failures = Json::array();
  for (const auto& f : s.failures) {
    const auto c = f.instance.polynomial.coeffs();
    failures.push_back({{"index", f.index},
                        {"coeffs", std::vector<double>(c.begin(), c.end())},
                        {"params", params_to_json(f.instance.params)},
                        {"disk", disk_to_json(f.disk)},
                        {"worst_root", Json::array({f.worst_root.real(), f.worst_root.imag()})},
                        {"excess", f.excess},
                        {"flagged", f.flagged}});
  }
  const auto& c = s.config;
  return {{"theorem", std::string(theorem_id(c.theorem))},
          {"seed", c.seed},
          {"count", c.count},
          {"degree_range", Json::array({c.min_degree, c.max_degree})},
          {"scale", c.scale},
          {"leading", std::string(to_string(c.leading))},
          {"generator", "mt19937_64"},
          {"passed", s.passed},
          {"failed", s.failed},
          {"failed_flagged", s.failed_flagged},
          {"inconclusive", s.inconclusive},
          {"failures", failures},
          {"inconclusive_indices", s.inconclusive_indices}};
}

}  // namespace ekbound

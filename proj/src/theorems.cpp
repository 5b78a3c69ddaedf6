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

#include "ekbound/theorems.hpp"

#include <cmath>
#include <string>

#include "ekbound/error.hpp"

namespace ekbound {

namespace {

Disk make_disk(double center, double radius) {
  // + 0.0 folds a -0.0 center into +0.0
  return Disk{Complex(center + 0.0, 0.0), radius};
}

bool nondecreasing(std::span<const double> c, double tol) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!(c[i] <= c[i + 1] + tol)) return false;
  }
  return true;
}

bool nonincreasing(std::span<const double> c, double tol) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!(c[i + 1] <= c[i] + tol)) return false;
  }
  return true;
}

std::vector<double> coeff_copy(const Polynomial& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

// Chain low <= a_1 <= ... <= a_{n-1} <= high, where `low` replaces a_0 and
// `high` replaces a_n. For n = 1 both ends attach to a_1.
bool shifted_chain(const Polynomial& p, double low, double high, double tol) {
  std::vector<double> c = coeff_copy(p);
  if (p.degree() == 1) {
    c = {low, p[1], high};
  } else {
    c.front() = low;
    c.back() = high;
  }
  return nondecreasing(c, tol);
}

// low <= a_1 <= ... <= a_lambda >= ... >= a_{n-1} >= high
bool unimodal_chain(const Polynomial& p, double low, double high, int lambda, double tol) {
  std::vector<double> c = coeff_copy(p);
  c.front() = low;
  c.back() = high;
  const std::span<const double> all(c);
  const auto peak = static_cast<std::size_t>(lambda);
  return nondecreasing(all.first(peak + 1), tol) && nonincreasing(all.subspan(peak), tol);
}

void require_k(double k) {
  if (!(k >= 1.0) || !std::isfinite(k)) {
    throw Error(ErrorCode::BadParam, "k must be a finite real >= 1, got " + std::to_string(k));
  }
}

void require_rho(double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw Error(ErrorCode::BadParam, "rho must lie in (0, 1], got " + std::to_string(rho));
  }
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::BadParam, std::string(name) + " must be finite");
  }
}

void require_interior_lambda(const Polynomial& p, int lambda) {
  const auto n = static_cast<long long>(p.degree());
  if (lambda <= 0 || lambda >= n) {
    throw Error(ErrorCode::BadParam, "lambda must satisfy 0 < lambda < n = " + std::to_string(n) +
                                         ", got " + std::to_string(lambda));
  }
}

void require(bool holds, std::string_view theorem) {
  if (!holds) {
    throw Error(ErrorCode::HypothesisViolated,
                "coefficient chain of theorem " + std::string(theorem) + " does not hold");
  }
}

Disk t1_formula(const Polynomial& p, double alpha, double beta) {
  const double an = p.leading();
  const double a0 = p[0];
  const double numerator = an + alpha - a0 + beta + std::abs(beta) + std::abs(a0);
  return make_disk(-alpha / an, numerator / std::abs(an));
}

Disk t3_formula(const Polynomial& p, double s, double t, int lambda) {
  const std::size_t n = p.degree();
  const double an = p.leading();
  const double a0 = p[0];
  const double top = p[n - 1];
  const double peak = p[static_cast<std::size_t>(lambda)];
  const double numerator =
      2.0 * peak - top + s - a0 + std::abs(s) + std::abs(a0) + std::abs(t);
  return make_disk((1.0 + t / an) - top / an, numerator / std::abs(an));
}

}  // namespace

std::string_view theorem_id(Theorem t) noexcept {
  switch (t) {
    case Theorem::A: return "a";
    case Theorem::B: return "b";
    case Theorem::C: return "c";
    case Theorem::D: return "d";
    case Theorem::E: return "e";
    case Theorem::Cor1: return "cor1";
    case Theorem::T1: return "t1";
    case Theorem::T2: return "t2";
    case Theorem::T3: return "t3";
  }
  return "?";
}

std::optional<Theorem> parse_theorem_id(std::string_view id) noexcept {
  for (Theorem t : kAllTheorems) {
    if (theorem_id(t) == id) return t;
  }
  return std::nullopt;
}

Theorem theorem_of(const TheoremParams& params) noexcept {
  return static_cast<Theorem>(params.index());
}

bool hypothesis_a(const Polynomial& p, double chain_tol) {
  return p[0] > 0.0 && nondecreasing(p.coeffs(), chain_tol);
}

bool hypothesis_b(const Polynomial& p, double chain_tol) {
  return nondecreasing(p.coeffs(), chain_tol);
}

bool hypothesis_c(const Polynomial& p, double k, double chain_tol) {
  require_k(k);
  return p[0] > 0.0 && shifted_chain(p, p[0], k * p.leading(), chain_tol);
}

bool hypothesis_d(const Polynomial& p, double k, double rho, double chain_tol) {
  require_k(k);
  require_rho(rho);
  const double low = rho * p[0];
  return low >= 0.0 && shifted_chain(p, low, k * p.leading(), chain_tol);
}

bool hypothesis_e(const Polynomial& p, double rho, int lambda, double chain_tol) {
  require_rho(rho);
  require_interior_lambda(p, lambda);
  return unimodal_chain(p, rho * p[0], p.leading(), lambda, chain_tol);
}

bool hypothesis_cor1(const Polynomial& p, double k, double rho, double chain_tol) {
  require_k(k);
  require_rho(rho);
  return shifted_chain(p, rho * p[0], k * p.leading(), chain_tol);
}

bool hypothesis_t1(const Polynomial& p, double alpha, double beta, double chain_tol) {
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  return shifted_chain(p, p[0] - beta, p.leading() + alpha, chain_tol);
}

bool hypothesis_t2(const Polynomial& p, double s, int lambda, double chain_tol) {
  return hypothesis_t3(p, s, 0.0, lambda, chain_tol);
}

bool hypothesis_t3(const Polynomial& p, double s, double t, int lambda, double chain_tol) {
  require_finite(s, "s");
  require_finite(t, "t");
  require_interior_lambda(p, lambda);
  return unimodal_chain(p, p[0] - s, p.leading() + t, lambda, chain_tol);
}

Disk disk_a(const Polynomial& p, double chain_tol) {
  require(hypothesis_a(p, chain_tol), "a");
  return make_disk(0.0, 1.0);
}

Disk disk_b(const Polynomial& p, double chain_tol) {
  require(hypothesis_b(p, chain_tol), "b");
  const double an = p.leading();
  const double a0 = p[0];
  return make_disk(0.0, (an - a0 + std::abs(a0)) / std::abs(an));
}

Disk disk_c(const Polynomial& p, double k, double chain_tol) {
  require(hypothesis_c(p, k, chain_tol), "c");
  return make_disk(-(k - 1.0), k);
}

Disk disk_d(const Polynomial& p, double k, double rho, double chain_tol) {
  require(hypothesis_d(p, k, rho, chain_tol), "d");
  return make_disk(-(k - 1.0), k + (2.0 * p[0] / p.leading()) * (1.0 - rho));
}

Disk disk_e(const Polynomial& p, double rho, int lambda, double chain_tol) {
  require(hypothesis_e(p, rho, lambda, chain_tol), "e");
  const std::size_t n = p.degree();
  const double an = p.leading();
  const double a0 = p[0];
  const double top = p[n - 1];
  const double peak = p[static_cast<std::size_t>(lambda)];
  const double numerator = 2.0 * peak - top + (2.0 - rho) * std::abs(a0) - rho * a0;
  return make_disk(1.0 - top / an, numerator / std::abs(an));
}

Disk disk_t1(const Polynomial& p, double alpha, double beta, double chain_tol) {
  require(hypothesis_t1(p, alpha, beta, chain_tol), "t1");
  return t1_formula(p, alpha, beta);
}

Disk disk_cor1(const Polynomial& p, double k, double rho, double chain_tol) {
  require(hypothesis_cor1(p, k, rho, chain_tol), "cor1");
  const double alpha = (k - 1.0) * p.leading();
  const double beta = (1.0 - rho) * p[0];
  return t1_formula(p, alpha, beta);
}

Disk disk_t3(const Polynomial& p, double s, double t, int lambda, double chain_tol) {
  require(hypothesis_t3(p, s, t, lambda, chain_tol), "t3");
  return t3_formula(p, s, t, lambda);
}

Disk disk_t2(const Polynomial& p, double s, int lambda, double chain_tol) {
  require(hypothesis_t2(p, s, lambda, chain_tol), "t2");
  return t3_formula(p, s, 0.0, lambda);
}

bool hypothesis(const Polynomial& p, const TheoremParams& params, double chain_tol) {
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ParamsA>) return hypothesis_a(p, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsB>) return hypothesis_b(p, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsC>) return hypothesis_c(p, v.k, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsD>)
          return hypothesis_d(p, v.k, v.rho, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsE>)
          return hypothesis_e(p, v.rho, v.lambda, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsCor1>)
          return hypothesis_cor1(p, v.k, v.rho, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsT1>)
          return hypothesis_t1(p, v.alpha, v.beta, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsT2>)
          return hypothesis_t2(p, v.s, v.lambda, chain_tol);
        else
          return hypothesis_t3(p, v.s, v.t, v.lambda, chain_tol);
      },
      params);
}

Disk bound(const Polynomial& p, const TheoremParams& params, double chain_tol) {
  return std::visit(
      [&](const auto& v) -> Disk {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ParamsA>) return disk_a(p, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsB>) return disk_b(p, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsC>) return disk_c(p, v.k, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsD>) return disk_d(p, v.k, v.rho, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsE>)
          return disk_e(p, v.rho, v.lambda, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsCor1>)
          return disk_cor1(p, v.k, v.rho, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsT1>)
          return disk_t1(p, v.alpha, v.beta, chain_tol);
        else if constexpr (std::is_same_v<T, ParamsT2>)
          return disk_t2(p, v.s, v.lambda, chain_tol);
        else
          return disk_t3(p, v.s, v.t, v.lambda, chain_tol);
      },
      params);
}

std::vector<int> feasible_lambdas(const Polynomial& p, double chain_tol) {
  std::vector<int> out;
  const std::size_t n = p.degree();
  if (n < 2) return out;
  const auto interior = p.coeffs().subspan(1, n - 1);  // a_1 .. a_{n-1}
  for (std::size_t lambda = 1; lambda < n; ++lambda) {
    const std::size_t peak = lambda - 1;  // index of a_lambda inside `interior`
    if (nondecreasing(interior.first(peak + 1), chain_tol) &&
        nonincreasing(interior.subspan(peak), chain_tol)) {
      out.push_back(static_cast<int>(lambda));
    }
  }
  return out;
}

}  // namespace ekbound

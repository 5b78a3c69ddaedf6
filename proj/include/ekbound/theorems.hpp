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

#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ekbound/polynomial.hpp"

namespace ekbound {

/// Closed disk |z - center| <= radius.
///
/// Every disk built here has a real center; it is stored as a complex value
/// so that containment and plotting treat all disks alike.
struct Disk {
  Complex center;
  double radius = 0.0;

  bool operator==(const Disk&) const = default;
};

/// Coefficient-chain theorems. A-E are the classical results, Cor1/T1/T2/T3
/// the generalizations with free shift parameters.
enum class Theorem { A, B, C, D, E, Cor1, T1, T2, T3 };

inline constexpr Theorem kAllTheorems[] = {Theorem::A,    Theorem::B,  Theorem::C,
                                           Theorem::D,    Theorem::E,  Theorem::Cor1,
                                           Theorem::T1,   Theorem::T2, Theorem::T3};

/// Lower-case identifier used on the command line and in JSON ("a", "cor1", "t3").
std::string_view theorem_id(Theorem t) noexcept;
std::optional<Theorem> parse_theorem_id(std::string_view id) noexcept;

struct ParamsA {
  bool operator==(const ParamsA&) const = default;
};
struct ParamsB {
  bool operator==(const ParamsB&) const = default;
};
struct ParamsC {
  double k = 1.0;
  bool operator==(const ParamsC&) const = default;
};
struct ParamsD {
  double k = 1.0;
  double rho = 1.0;
  bool operator==(const ParamsD&) const = default;
};
struct ParamsE {
  double rho = 1.0;
  int lambda = 1;
  bool operator==(const ParamsE&) const = default;
};
struct ParamsCor1 {
  double k = 1.0;
  double rho = 1.0;
  bool operator==(const ParamsCor1&) const = default;
};
struct ParamsT1 {
  double alpha = 0.0;
  double beta = 0.0;
  bool operator==(const ParamsT1&) const = default;
};
struct ParamsT2 {
  double s = 0.0;
  int lambda = 1;
  bool operator==(const ParamsT2&) const = default;
};
struct ParamsT3 {
  double s = 0.0;
  double t = 0.0;
  int lambda = 1;
  bool operator==(const ParamsT3&) const = default;
};

using TheoremParams = std::variant<ParamsA, ParamsB, ParamsC, ParamsD, ParamsE, ParamsCor1,
                                   ParamsT1, ParamsT2, ParamsT3>;

Theorem theorem_of(const TheoremParams& params) noexcept;

// All chain comparisons are non-strict and exact unless `chain_tol` > 0, in
// which case each link x <= y is relaxed to x <= y + chain_tol. Sign
// conditions (0 < a_0 for A and C, 0 <= rho*a_0 for D) are never relaxed.
//
// hypothesis_* functions throw Error(BadParam) for out-of-domain parameters
// (k < 1, rho outside (0,1], lambda outside its range) and otherwise return
// whether the chain holds. disk_* functions recheck the hypothesis and throw
// Error(HypothesisViolated) when it fails.

bool hypothesis_a(const Polynomial& p, double chain_tol = 0.0);
bool hypothesis_b(const Polynomial& p, double chain_tol = 0.0);
bool hypothesis_c(const Polynomial& p, double k, double chain_tol = 0.0);
bool hypothesis_d(const Polynomial& p, double k, double rho, double chain_tol = 0.0);
/// Theorem E is restricted to 1 <= lambda < n.
bool hypothesis_e(const Polynomial& p, double rho, int lambda, double chain_tol = 0.0);
bool hypothesis_cor1(const Polynomial& p, double k, double rho, double chain_tol = 0.0);

/// a_0 - beta <= a_1 <= ... <= a_{n-1} <= a_n + alpha. For n = 1 the chain
/// reads a_0 - beta <= a_1 <= a_1 + alpha.
bool hypothesis_t1(const Polynomial& p, double alpha, double beta, double chain_tol = 0.0);
bool hypothesis_t2(const Polynomial& p, double s, int lambda, double chain_tol = 0.0);
/// a_0 - s <= a_1 <= ... <= a_lambda >= ... >= a_{n-1} >= a_n + t, 0 < lambda < n.
bool hypothesis_t3(const Polynomial& p, double s, double t, int lambda, double chain_tol = 0.0);

Disk disk_a(const Polynomial& p, double chain_tol = 0.0);
Disk disk_b(const Polynomial& p, double chain_tol = 0.0);
Disk disk_c(const Polynomial& p, double k, double chain_tol = 0.0);
Disk disk_d(const Polynomial& p, double k, double rho, double chain_tol = 0.0);
Disk disk_e(const Polynomial& p, double rho, int lambda, double chain_tol = 0.0);

/// center -alpha/a_n, radius (a_n + alpha - a_0 + beta + |beta| + |a_0|) / |a_n|.
Disk disk_t1(const Polynomial& p, double alpha, double beta, double chain_tol = 0.0);
/// t1 with alpha = (k-1) a_n, beta = (1-rho) a_0.
Disk disk_cor1(const Polynomial& p, double k, double rho, double chain_tol = 0.0);
/// center 1 + t/a_n - a_{n-1}/a_n,
/// radius (2 a_lambda - a_{n-1} + s - a_0 + |s| + |a_0| + |t|) / |a_n|.
Disk disk_t3(const Polynomial& p, double s, double t, int lambda, double chain_tol = 0.0);
/// t3 with t = 0.
Disk disk_t2(const Polynomial& p, double s, int lambda, double chain_tol = 0.0);

bool hypothesis(const Polynomial& p, const TheoremParams& params, double chain_tol = 0.0);
Disk bound(const Polynomial& p, const TheoremParams& params, double chain_tol = 0.0);

/// All lambda in (0, n) with a_1 <= ... <= a_lambda >= ... >= a_{n-1}.
/// The result is a contiguous range; empty for n = 1 or a non-unimodal interior.
std::vector<int> feasible_lambdas(const Polynomial& p, double chain_tol = 0.0);

}  // namespace ekbound

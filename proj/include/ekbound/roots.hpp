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

#include <cstddef>
#include <optional>
#include <vector>

#include "ekbound/polynomial.hpp"
#include "ekbound/theorems.hpp"

namespace ekbound {

struct RootOptions {
  double tol = 1e-13;  // max relative Aberth step
  int max_iter = 1000;
};

/// Zeros of a polynomial, sorted by (real, imag).
struct RootSet {
  std::vector<Complex> roots;
  /// |p(r)| / sum_j |a_j| |r|^j, one per root.
  std::vector<double> residuals;
  int iterations = 0;
  bool converged = false;
};

inline constexpr double kResidualLimit = 1e-10;

/// 1 + max_{j<n} |a_j| / |a_n|.
double cauchy_bound(const Polynomial& p) noexcept;

double scaled_residual(const Polynomial& p, Complex z) noexcept;

/// Simultaneous Aberth-Ehrlich iteration.
///
/// Exact zero roots (a_0 = a_1 = ... = 0) are split off first and appended
/// as exact zeros. The remaining m roots start on a circle of radius
/// 0.9 * (Cauchy bound of the deflated polynomial) at angles
/// 2*pi*k/m + 0.4. A root stops moving once its relative step is <= tol or
/// |p(z)| has reached the rounding level of Horner evaluation. The solve is
/// marked converged when every root stopped within max_iter sweeps and all
/// scaled residuals are <= kResidualLimit; otherwise the best iterate is
/// returned with converged = false.
RootSet find_roots(const Polynomial& p, RootOptions options = {});

enum class Containment { Contained, Failed, Inconclusive, Unchecked };

std::string_view to_string(Containment c) noexcept;

struct Verdict {
  Containment status = Containment::Unchecked;
  std::optional<std::size_t> worst_root;  // set when status == Failed
  double excess = 0.0;                    // distance beyond the radius
};

/// Contained iff every root r has |r - center| <= radius (1 + rel_tol) + abs_tol.
/// A solve that did not converge is Inconclusive.
Verdict containment(const RootSet& rs, const Disk& d, double rel_tol = 1e-9,
                    double abs_tol = 1e-12);

/// max_r |r - center| / radius. Throws Error(ZeroRadius) when radius == 0.
double tightness(const RootSet& rs, const Disk& d);

struct VietaResiduals {
  double sum = 0.0;      // |sum r + a_{n-1}/a_n|
  double product = 0.0;  // |prod r - (-1)^n a_0/a_n|
};

VietaResiduals vieta_check(const Polynomial& p, const RootSet& rs);

}  // namespace ekbound

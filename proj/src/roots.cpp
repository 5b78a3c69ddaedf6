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

#include "ekbound/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ekbound/error.hpp"

namespace ekbound {

namespace {

struct HornerValue {
  Complex value;
  Complex derivative;
  double magnitude;  // sum |b_j| |z|^j, scales the rounding error of `value`
};

HornerValue horner(std::span<const double> b, Complex z) {
  Complex v = b.back();
  Complex dv = 0.0;
  double mag = std::abs(b.back());
  const double az = std::abs(z);
  for (std::size_t j = b.size() - 1; j-- > 0;) {
    dv = dv * z + v;
    v = v * z + b[j];
    mag = mag * az + std::abs(b[j]);
  }
  return {v, dv, mag};
}

bool lex_less(Complex x, Complex y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

}  // namespace

double cauchy_bound(const Polynomial& p) noexcept {
  const auto a = p.coeffs();
  double m = 0.0;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) m = std::max(m, std::abs(a[j]));
  return 1.0 + m / std::abs(p.leading());
}

double scaled_residual(const Polynomial& p, Complex z) noexcept {
  const auto h = horner(p.coeffs(), z);
  if (h.magnitude == 0.0) return 0.0;
  return std::abs(h.value) / h.magnitude;
}

RootSet find_roots(const Polynomial& p, RootOptions options) {
  const auto a = p.coeffs();
  std::size_t zeros = 0;
  while (a[zeros] == 0.0) ++zeros;  // terminates: a_n != 0

  const std::span<const double> b = a.subspan(zeros);
  const std::size_t m = b.size() - 1;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  std::vector<Complex> z(m);
  std::vector<bool> settled(m, false);
  int iter = 0;
  if (m == 1) {
    z[0] = Complex(-b[0] / b[1], 0.0);
    settled[0] = true;
  } else if (m > 0) {
    double big = 0.0;
    for (std::size_t j = 0; j < m; ++j) big = std::max(big, std::abs(b[j]));
    const double start_radius = 0.9 * (1.0 + big / std::abs(b.back()));
    for (std::size_t k = 0; k < m; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                               static_cast<double>(m) + 0.4;
      z[k] = std::polar(start_radius, angle);
    }

    const double noise_factor = 4.0 * static_cast<double>(m + 1) * eps;
    std::size_t remaining = m;
    while (remaining > 0 && iter < options.max_iter) {
      ++iter;
      for (std::size_t k = 0; k < m; ++k) {
        if (settled[k]) continue;
        const auto h = horner(b, z[k]);
        if (std::abs(h.value) <= noise_factor * h.magnitude) {
          settled[k] = true;
          --remaining;
          continue;
        }
        Complex repulsion = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
          if (j != k) repulsion += 1.0 / (z[k] - z[j]);
        }
        const Complex denom = h.derivative / h.value - repulsion;
        Complex step;
        if (denom == Complex(0.0)) {
          // stationary point of the Aberth correction; nudge off it
          step = std::polar(1e-3 * (1.0 + std::abs(z[k])), 1.0 + static_cast<double>(k));
        } else {
          step = 1.0 / denom;
        }
        z[k] -= step;
        if (std::abs(step) <= options.tol * std::abs(z[k])) {
          settled[k] = true;
          --remaining;
        }
      }
    }
  }

  RootSet rs;
  rs.iterations = iter;
  rs.roots = std::move(z);
  rs.roots.insert(rs.roots.end(), zeros, Complex(0.0, 0.0));
  std::sort(rs.roots.begin(), rs.roots.end(), lex_less);
  rs.residuals.reserve(rs.roots.size());
  bool small = true;
  for (const Complex& r : rs.roots) {
    const double res = scaled_residual(p, r);
    rs.residuals.push_back(res);
    small = small && res <= kResidualLimit;
  }
  rs.converged = small && std::all_of(settled.begin(), settled.end(), [](bool s) { return s; });
  return rs;
}

std::string_view to_string(Containment c) noexcept {
  switch (c) {
    case Containment::Contained: return "contained";
    case Containment::Failed: return "failed";
    case Containment::Inconclusive: return "inconclusive";
    case Containment::Unchecked: return "unchecked";
  }
  return "unchecked";
}

Verdict containment(const RootSet& rs, const Disk& d, double rel_tol, double abs_tol) {
  Verdict v;
  if (!rs.converged) {
    v.status = Containment::Inconclusive;
    return v;
  }
  const double limit = d.radius * (1.0 + rel_tol) + abs_tol;
  v.status = Containment::Contained;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const double dist = std::abs(rs.roots[i] - d.center);
    if (dist > limit) {
      const double excess = dist - d.radius;
      if (v.status != Containment::Failed || excess > v.excess) {
        v.status = Containment::Failed;
        v.worst_root = i;
        v.excess = excess;
      }
    }
  }
  return v;
}

double tightness(const RootSet& rs, const Disk& d) {
  if (d.radius == 0.0) {
    throw Error(ErrorCode::ZeroRadius, "tightness is undefined for a zero-radius disk");
  }
  double far = 0.0;
  for (const Complex& r : rs.roots) far = std::max(far, std::abs(r - d.center));
  return far / d.radius;
}

VietaResiduals vieta_check(const Polynomial& p, const RootSet& rs) {
  const std::size_t n = p.degree();
  const double an = p.leading();
  Complex sum = 0.0;
  Complex prod = 1.0;
  for (const Complex& r : rs.roots) {
    sum += r;
    prod *= r;
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return {std::abs(sum + p[n - 1] / an), std::abs(prod - sign * p[0] / an)};
}

}  // namespace ekbound

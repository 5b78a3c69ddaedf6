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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ekbound {

using Complex = std::complex<double>;

/// Real polynomial a_0 + a_1 z + ... + a_n z^n.
///
/// Coefficients are kept in ascending power order, a_0 first, which is the
/// order every coefficient chain in this library is written in. Construction
/// enforces degree >= 1, a finite coefficient vector and a_n != 0.
class Polynomial {
 public:
  explicit Polynomial(std::vector<double> coeffs);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](std::size_t j) const { return coeffs_[j]; }
  double leading() const noexcept { return coeffs_.back(); }

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<double> coeffs_;
};

/// Horner evaluation, highest coefficient first.
Complex eval(const Polynomial& p, Complex z) noexcept;

/// g(z) = (1 - z) p(z), degree n + 1:
/// [a_0, a_1 - a_0, ..., a_n - a_{n-1}, -a_n].
Polynomial one_minus_z_product(const Polynomial& p);

/// Accepts "a_0,a_1,...,a_n" (decimal or scientific literals, optional
/// whitespace), a bare JSON array, or {"coeffs": [a_0, ..., a_n]}.
/// Throws Error with MalformedInput, TooShort or DegenerateLeading.
Polynomial parse_polynomial(std::string_view text);

/// Comma-separated ascending list using the shortest round-trip decimal form.
std::string serialize(const Polynomial& p);

}  // namespace ekbound

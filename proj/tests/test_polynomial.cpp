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

#include <doctest.h>

#include <cmath>
#include <random>

#include "ekbound/error.hpp"
#include "ekbound/polynomial.hpp"
#include "support/oracles.hpp"

using namespace ekbound;

namespace {

const std::vector<double> kQuintic{-1, 1, 2, 3, 4, 3};

ErrorCode code_of(std::string_view text) {
  try {
    parse_polynomial(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected parse error for ", text);
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("construction rejects invalid coefficient vectors") {
  CHECK_THROWS_AS(Polynomial({1.0}), Error);
  CHECK_THROWS_AS(Polynomial({}), Error);
  CHECK_THROWS_AS(Polynomial({1.0, 0.0}), Error);
  CHECK_THROWS_AS(Polynomial({1.0, NAN}), Error);
  CHECK_THROWS_AS(Polynomial({INFINITY, 1.0}), Error);
  CHECK(Polynomial({0.0, 1.0}).degree() == 1);
}

TEST_CASE("horner evaluation") {
  const Polynomial p(kQuintic);
  CHECK(eval(p, 0.0) == Complex(-1.0, 0.0));
  CHECK(eval(p, 1.0) == Complex(12.0, 0.0));
  CHECK(std::abs(eval(p, 0.3916)) <= 1e-2);

  const Polynomial q({2.0, -3.0, 0.5, 1.0});
  const Complex z(0.3, -1.7);
  CHECK(std::abs(eval(q, z) - oracle::power_sum({2.0, -3.0, 0.5, 1.0}, z)) <= 1e-12);
}

TEST_CASE("eval at 0 and 1 is exact on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(2 + trial % 10);
    for (double& x : a) x = oracle::grid_value(rng, -10.0, 10.0, 64.0);
    if (a.back() == 0.0) a.back() = 1.0;
    const Polynomial p(a);
    CHECK(eval(p, 0.0) == Complex(a[0], 0.0));
    double sum = 0.0;  // exact on a 1/64 grid with these magnitudes
    for (double x : a) sum += x;
    CHECK(eval(p, 1.0).real() == sum);
  }
}

TEST_CASE("one minus z product") {
  CHECK(one_minus_z_product(Polynomial({-1, 1})) == Polynomial({-1, 2, -1}));
  CHECK(one_minus_z_product(Polynomial({1, 1})) == Polynomial({1, 0, -1}));
  CHECK(one_minus_z_product(Polynomial(kQuintic)) == Polynomial({-1, 2, 1, 1, 1, -1, -3}));
  CHECK(one_minus_z_product(Polynomial(kQuintic)) ==
        Polynomial(oracle::multiply(kQuintic, {1.0, -1.0})));
}

TEST_CASE("g = (1 - z) p agrees with the product of evaluations") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::uniform_int_distribution<int> deg(1, 12);
  std::uniform_real_distribution<double> zc(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(static_cast<std::size_t>(deg(rng)) + 1);
    for (double& x : a) x = u(rng);
    const Polynomial p(a);
    const Polynomial g = one_minus_z_product(p);
    REQUIRE(g.degree() == p.degree() + 1);
    for (int k = 0; k < 50; ++k) {
      const Complex z(zc(rng), zc(rng));
      const double scale = std::pow(1.0 + std::abs(z), static_cast<double>(p.degree() + 1));
      CHECK(std::abs(eval(g, z) - (1.0 - z) * eval(p, z)) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("parse accepts list and json forms") {
  const Polynomial p = parse_polynomial("-1,1,2,3,4,3");
  CHECK(p.degree() == 5);
  CHECK(p[0] == -1.0);
  CHECK(parse_polynomial(" -1 , 1,2 ,3,4, 3 ") == p);
  CHECK(parse_polynomial("[-1, 1, 2, 3, 4, 3]") == p);
  CHECK(parse_polynomial(R"({"coeffs": [-1, 1, 2, 3, 4, 3]})") == p);
  CHECK(parse_polynomial("-1e0,+1,0.2e1,3,4,3.0") == p);
  CHECK(parse_polynomial("0,1").degree() == 1);
}

TEST_CASE("parse errors carry codes") {
  CHECK(code_of("1,0") == ErrorCode::DegenerateLeading);
  CHECK(code_of("5") == ErrorCode::TooShort);
  CHECK(code_of("") == ErrorCode::MalformedInput);
  CHECK(code_of("1,x") == ErrorCode::MalformedInput);
  CHECK(code_of("1,,2") == ErrorCode::MalformedInput);
  CHECK(code_of("1,nan") == ErrorCode::MalformedInput);
  CHECK(code_of("1,2e999") == ErrorCode::MalformedInput);
  CHECK(code_of("[1, \"a\"]") == ErrorCode::MalformedInput);
  CHECK(code_of(R"({"coef": [1, 2]})") == ErrorCode::MalformedInput);
  CHECK(code_of("[1, 2") == ErrorCode::MalformedInput);
}

TEST_CASE("serialize round trips") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> a(2 + trial % 15);
    for (double& x : a) x = u(rng) * std::pow(10.0, trial % 7 - 3);
    const Polynomial p(a);
    CHECK(parse_polynomial(serialize(p)) == p);
  }
  CHECK(serialize(Polynomial(kQuintic)) == "-1,1,2,3,4,3");
}

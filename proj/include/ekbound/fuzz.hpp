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

#include <cstdint>
#include <random>
#include <vector>

#include "ekbound/report.hpp"
#include "ekbound/roots.hpp"
#include "ekbound/theorems.hpp"

namespace ekbound {

enum class LeadingSign { Any, Positive, Negative };

std::string_view to_string(LeadingSign s) noexcept;

struct FuzzConfig {
  Theorem theorem = Theorem::T1;
  std::uint64_t count = 1000;
  int min_degree = 2;
  int max_degree = 15;
  double scale = 10.0;
  std::uint64_t seed = 42;
  LeadingSign leading = LeadingSign::Any;
  RootOptions solver;
};

/// Throws Error(BadParam) for an empty or out-of-range degree range
/// (2 <= min <= max <= 40), a non-positive scale, or a leading sign the
/// theorem's chain cannot produce (A, C, D and Cor1 instances always have
/// a_n > 0).
void validate(const FuzzConfig& config);

struct FuzzInstance {
  Polynomial polynomial;
  TheoremParams params;
};

/// Deterministic stream of polynomials that satisfy the configured theorem's
/// hypothesis by construction.
///
/// Randomness comes from std::mt19937_64 seeded with `seed`; its output
/// sequence is fixed by the C++ standard. Uniform reals are (x >> 11) * 2^-53
/// and integers in [lo, hi] are lo + x mod (hi - lo + 1), so the stream does
/// not depend on the standard library's distribution classes. Every sampled
/// value sits on a 2^-10 grid (2^-14 after a rho multiple) so that the chain
/// arithmetic is exact and boundary instances with zero slack are reproduced
/// bit for bit.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(const FuzzConfig& config);

  FuzzInstance next();

 private:
  double unit();                     // [0, 1)
  int int_in(int lo, int hi);        // inclusive
  double grid(double x) const;       // round to the 2^-10 grid
  double value();                    // grid value in [-scale, scale]
  double magnitude();                // grid value in (0, scale]
  double step();                     // nonnegative chain increment, 0 w.p. 0.1
  double slack();                    // parameter slack, 0 w.p. 0.2
  double lead_sign();                // +1 / -1 per config
  double rho();                      // j/16, j in [1, 16]
  double k();                        // 1 + j/8, j in [0, 16]
  int degree();

  std::vector<double> descending_from_peak(int n, int lambda);
  void shift_to_sign(std::vector<double>& a, std::size_t from);

  FuzzInstance try_next();

  FuzzConfig config_;
  std::mt19937_64 rng_;
};

struct FuzzFailure {
  std::uint64_t index = 0;
  FuzzInstance instance;
  Disk disk;
  Complex worst_root;
  double excess = 0.0;
  bool flagged = false;  // a_n < 0
};

struct FuzzSummary {
  FuzzConfig config;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t failed_flagged = 0;  // subset of `failed` with a_n < 0
  std::uint64_t inconclusive = 0;
  std::vector<FuzzFailure> failures;
  std::vector<std::uint64_t> inconclusive_indices;
};

/// Generates config.count instances, solves each, and checks containment.
FuzzSummary run_fuzz(const FuzzConfig& config);

Json fuzz_to_json(const FuzzSummary& summary);

}  // namespace ekbound

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
#include <string>
#include <vector>

#include "ekbound/polynomial.hpp"
#include "ekbound/roots.hpp"
#include "ekbound/theorems.hpp"

namespace ekbound {

/// |center| + radius: radius of the smallest origin-centered disk that
/// contains `d`. This is the scalar every cross-theorem ranking uses.
double quality(const Disk& d) noexcept;

/// Near-equality of two quality values (relative 1e-12). Closed-form
/// candidates that tie analytically may differ by a few ulps.
bool quality_ties(double q1, double q2) noexcept;

/// Total order on disks: quality, then radius.
bool better_disk(const Disk& lhs, const Disk& rhs) noexcept;

inline constexpr const char* kQualityMetric = "center_modulus_plus_radius";

/// Feasible (alpha, beta) for t1: alpha >= alpha_min, beta >= beta_min.
/// The thresholds are the exact floating-point boundaries of the chain links,
/// so membership in the region and hypothesis_t1 agree bit for bit.
struct T1Region {
  double alpha_min = 0.0;
  double beta_min = 0.0;
};

/// Feasible (s, t, lambda) for t3: s >= s_min, t <= t_max, lambda in `lambdas`.
struct T3Region {
  double s_min = 0.0;
  double t_max = 0.0;
  std::vector<int> lambdas;
};

/// nullopt when a_1 <= ... <= a_{n-1} fails.
std::optional<T1Region> feasible_region_t1(const Polynomial& p, double chain_tol = 0.0);
/// nullopt when no lambda is feasible.
std::optional<T3Region> feasible_region_t3(const Polynomial& p, double chain_tol = 0.0);

struct T1Choice {
  double alpha = 0.0;
  double beta = 0.0;
  Disk disk;
};

struct T3Choice {
  double s = 0.0;
  double t = 0.0;
  int lambda = 0;
  Disk disk;
};

/// Minimizes quality(disk_t1) over the candidates {alpha_min, 0} x {beta_min, 0}
/// that are feasible. Ties go to smaller |alpha|, then smaller |beta|.
/// Throws Error(Infeasible).
T1Choice optimize_t1(const Polynomial& p, double chain_tol = 0.0);

/// Same over {s_min, 0} x {t_max, 0} for each feasible lambda. Ties go to
/// smaller lambda, then |s|, then |t|. Throws Error(Infeasible).
T3Choice optimize_t3(const Polynomial& p, double chain_tol = 0.0);

/// optimize_t3 with t pinned to 0 (requires a_{n-1} >= a_n).
T3Choice optimize_t2(const Polynomial& p, double chain_tol = 0.0);

/// Smallest k >= 1 with a_{n-1} <= k a_n; defined only for a_n > 0.
std::optional<double> k_min(const Polynomial& p, double chain_tol = 0.0);
/// Largest rho in (0, 1] with rho a_0 <= a_1; nullopt if none exists.
std::optional<double> rho_max(const Polynomial& p, double chain_tol = 0.0);

struct Candidate {
  TheoremParams params;
  Disk disk;
};

/// Parameters for one theorem chosen the way best_bound chooses them
/// (optimized for T1/T2/T3, k_min/rho_max for C/D/Cor1, best lambda for E).
/// nullopt when the theorem does not apply.
std::optional<Candidate> auto_candidate(const Polynomial& p, Theorem theorem,
                                        double chain_tol = 0.0);

/// Every applicable theorem in the order A, B, C, D, E (one entry per
/// feasible lambda), Cor1, T1, T2, T3.
std::vector<Candidate> applicable_bounds(const Polynomial& p, double chain_tol = 0.0);

struct BoundEntry {
  TheoremParams params;
  Disk disk;
  Containment containment = Containment::Unchecked;
  std::optional<double> tightness;
  Verdict verdict;
  /// Failed containment with a_n < 0: reported, not treated as a disproof.
  bool flagged = false;
};

struct BoundReport {
  Polynomial polynomial;
  std::vector<BoundEntry> entries;
  std::optional<std::size_t> best;
  std::string quality_metric = kQualityMetric;
  std::optional<RootSet> roots;
};

/// Index of the quality-minimal entry whose containment is not Failed;
/// ties keep the earlier entry.
std::optional<std::size_t> select_best(const std::vector<BoundEntry>& entries);

/// Wraps candidates into a report; with roots, fills containment and tightness.
BoundReport make_report(const Polynomial& p, const std::vector<Candidate>& candidates,
                        const RootSet* roots = nullptr);

/// All applicable theorems with their chosen parameters and the best disk.
/// An empty entry list means no theorem applies.
BoundReport best_bound(const Polynomial& p, const RootSet* roots = nullptr,
                       double chain_tol = 0.0);

}  // namespace ekbound

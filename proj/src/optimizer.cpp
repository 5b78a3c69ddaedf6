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

#include "ekbound/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ekbound/error.hpp"

namespace ekbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxUlpWalk = 256;

// Nudges an algebraic boundary guess `x` upward until the monotone predicate
// holds in floating point. The guess itself is kept when it already holds.
template <typename Pred>
double lowest_true(Pred pred, double x) {
  for (int i = 0; i < kMaxUlpWalk && !pred(x); ++i) x = std::nextafter(x, kInf);
  return x;
}

// Mirror image: true below, false above.
template <typename Pred>
double highest_true(Pred pred, double x) {
  for (int i = 0; i < kMaxUlpWalk && !pred(x); ++i) x = std::nextafter(x, -kInf);
  return x;
}

// a_{n-1}, or a_1 when n = 1 (the chain's upper end then attaches to a_1).
double top_coefficient(const Polynomial& p) { return p[p.degree() == 1 ? 1 : p.degree() - 1]; }

bool interior_nondecreasing(const Polynomial& p, double tol) {
  for (std::size_t j = 1; j + 2 <= p.degree(); ++j) {
    if (!(p[j] <= p[j + 1] + tol)) return false;
  }
  return true;
}

// Lower bound on the shift of a_0 in "a_0 - shift <= a_1".
double low_end_shift_min(const Polynomial& p, double tol) {
  const double a0 = p[0];
  const double a1 = p[1];
  return lowest_true([&](double shift) { return a0 - shift <= a1 + tol; }, a0 - a1 - tol);
}

struct Pick {
  double q = kInf;
  bool set = false;
};

T3Choice optimize_unimodal(const Polynomial& p, double tol, bool pin_t, const char* name) {
  const auto region = feasible_region_t3(p, tol);
  if (!region || (pin_t && region->t_max < 0.0)) {
    throw Error(ErrorCode::Infeasible, std::string("theorem ") + name +
                                           " has no feasible parameters for this polynomial");
  }
  std::vector<double> s_cands{region->s_min};
  if (region->s_min < 0.0) s_cands.push_back(0.0);
  std::vector<double> t_cands;
  if (pin_t) {
    t_cands.push_back(0.0);
  } else {
    t_cands.push_back(region->t_max);
    if (region->t_max > 0.0) t_cands.push_back(0.0);
  }

  T3Choice best;
  Pick pick;
  for (int lambda : region->lambdas) {
    for (double s : s_cands) {
      for (double t : t_cands) {
        const Disk d = disk_t3(p, s, t, lambda, tol);
        const double q = quality(d);
        bool take = !pick.set || (q < pick.q && !quality_ties(q, pick.q));
        if (!take && quality_ties(q, pick.q)) {
          // lambda ascends in the outer loop, so only |s| and |t| remain
          if (lambda == best.lambda) {
            take = std::abs(s) < std::abs(best.s) ||
                   (std::abs(s) == std::abs(best.s) && std::abs(t) < std::abs(best.t));
          }
        }
        if (take) {
          best = T3Choice{s, t, lambda, d};
          pick = Pick{q, true};
        }
      }
    }
  }
  return best;
}

}  // namespace

double quality(const Disk& d) noexcept { return std::abs(d.center) + d.radius; }

bool quality_ties(double q1, double q2) noexcept {
  return std::abs(q1 - q2) <= 1e-12 * std::max({1.0, std::abs(q1), std::abs(q2)});
}

bool better_disk(const Disk& lhs, const Disk& rhs) noexcept {
  const double ql = quality(lhs);
  const double qr = quality(rhs);
  if (!quality_ties(ql, qr)) return ql < qr;
  return lhs.radius < rhs.radius;
}

std::optional<T1Region> feasible_region_t1(const Polynomial& p, double chain_tol) {
  if (!interior_nondecreasing(p, chain_tol)) return std::nullopt;
  const double an = p.leading();
  const double top = top_coefficient(p);
  T1Region r;
  r.alpha_min = lowest_true([&](double alpha) { return top <= (an + alpha) + chain_tol; },
                            top - an - chain_tol);
  r.beta_min = low_end_shift_min(p, chain_tol);
  return r;
}

std::optional<T3Region> feasible_region_t3(const Polynomial& p, double chain_tol) {
  T3Region r;
  r.lambdas = feasible_lambdas(p, chain_tol);
  if (r.lambdas.empty()) return std::nullopt;
  const double an = p.leading();
  const double top = p[p.degree() - 1];
  r.s_min = low_end_shift_min(p, chain_tol);
  r.t_max = highest_true([&](double t) { return an + t <= top + chain_tol; },
                         top - an + chain_tol);
  return r;
}

T1Choice optimize_t1(const Polynomial& p, double chain_tol) {
  const auto region = feasible_region_t1(p, chain_tol);
  if (!region) {
    throw Error(ErrorCode::Infeasible,
                "theorem t1 needs a_1 <= ... <= a_{n-1}; the interior chain fails");
  }
  std::vector<double> alphas{region->alpha_min};
  if (region->alpha_min < 0.0) alphas.push_back(0.0);
  std::vector<double> betas{region->beta_min};
  if (region->beta_min < 0.0) betas.push_back(0.0);

  T1Choice best;
  Pick pick;
  for (double alpha : alphas) {
    for (double beta : betas) {
      const Disk d = disk_t1(p, alpha, beta, chain_tol);
      const double q = quality(d);
      bool take = !pick.set || (q < pick.q && !quality_ties(q, pick.q));
      if (!take && quality_ties(q, pick.q)) {
        take = std::abs(alpha) < std::abs(best.alpha) ||
               (std::abs(alpha) == std::abs(best.alpha) && std::abs(beta) < std::abs(best.beta));
      }
      if (take) {
        best = T1Choice{alpha, beta, d};
        pick = Pick{q, true};
      }
    }
  }
  return best;
}

T3Choice optimize_t3(const Polynomial& p, double chain_tol) {
  return optimize_unimodal(p, chain_tol, false, "t3");
}

T3Choice optimize_t2(const Polynomial& p, double chain_tol) {
  return optimize_unimodal(p, chain_tol, true, "t2");
}

std::optional<double> k_min(const Polynomial& p, double chain_tol) {
  const double an = p.leading();
  if (!(an > 0.0)) return std::nullopt;
  const double top = top_coefficient(p);
  const auto pred = [&](double k) { return top <= k * an + chain_tol; };
  if (pred(1.0)) return 1.0;
  return std::max(1.0, lowest_true(pred, top / an));
}

std::optional<double> rho_max(const Polynomial& p, double chain_tol) {
  const double a0 = p[0];
  const double a1 = p[1];
  const auto pred = [&](double rho) { return rho * a0 <= a1 + chain_tol; };
  if (pred(1.0)) return 1.0;
  if (!(a0 > 0.0)) return std::nullopt;
  const double guess = (a1 + chain_tol) / a0;
  if (!(guess > 0.0)) return std::nullopt;
  const double rho = std::min(1.0, highest_true(pred, guess));
  if (!(rho > 0.0) || !pred(rho)) return std::nullopt;
  return rho;
}

namespace {

std::vector<Candidate> e_candidates(const Polynomial& p, double tol) {
  std::vector<Candidate> out;
  const auto rho = rho_max(p, tol);
  if (!rho || p.degree() < 2) return out;
  for (int lambda = 1; lambda < static_cast<int>(p.degree()); ++lambda) {
    if (hypothesis_e(p, *rho, lambda, tol)) {
      out.push_back({ParamsE{*rho, lambda}, disk_e(p, *rho, lambda, tol)});
    }
  }
  return out;
}

}  // namespace

std::optional<Candidate> auto_candidate(const Polynomial& p, Theorem theorem, double chain_tol) {
  const double tol = chain_tol;
  switch (theorem) {
    case Theorem::A:
      if (hypothesis_a(p, tol)) return Candidate{ParamsA{}, disk_a(p, tol)};
      return std::nullopt;
    case Theorem::B:
      if (hypothesis_b(p, tol)) return Candidate{ParamsB{}, disk_b(p, tol)};
      return std::nullopt;
    case Theorem::C: {
      const auto k = k_min(p, tol);
      if (k && hypothesis_c(p, *k, tol)) return Candidate{ParamsC{*k}, disk_c(p, *k, tol)};
      return std::nullopt;
    }
    case Theorem::D: {
      const auto k = k_min(p, tol);
      const auto rho = rho_max(p, tol);
      if (k && rho && hypothesis_d(p, *k, *rho, tol)) {
        return Candidate{ParamsD{*k, *rho}, disk_d(p, *k, *rho, tol)};
      }
      return std::nullopt;
    }
    case Theorem::E: {
      auto all = e_candidates(p, tol);
      if (all.empty()) return std::nullopt;
      auto best = all.begin();
      for (auto it = all.begin(); it != all.end(); ++it) {
        if (better_disk(it->disk, best->disk)) best = it;
      }
      return *best;
    }
    case Theorem::Cor1: {
      const auto k = k_min(p, tol);
      const auto rho = rho_max(p, tol);
      if (k && rho && hypothesis_cor1(p, *k, *rho, tol)) {
        return Candidate{ParamsCor1{*k, *rho}, disk_cor1(p, *k, *rho, tol)};
      }
      return std::nullopt;
    }
    case Theorem::T1: {
      if (!feasible_region_t1(p, tol)) return std::nullopt;
      const auto c = optimize_t1(p, tol);
      return Candidate{ParamsT1{c.alpha, c.beta}, c.disk};
    }
    case Theorem::T2: {
      const auto region = feasible_region_t3(p, tol);
      if (!region || region->t_max < 0.0) return std::nullopt;
      const auto c = optimize_t2(p, tol);
      return Candidate{ParamsT2{c.s, c.lambda}, c.disk};
    }
    case Theorem::T3: {
      if (!feasible_region_t3(p, tol)) return std::nullopt;
      const auto c = optimize_t3(p, tol);
      return Candidate{ParamsT3{c.s, c.t, c.lambda}, c.disk};
    }
  }
  return std::nullopt;
}

std::vector<Candidate> applicable_bounds(const Polynomial& p, double chain_tol) {
  std::vector<Candidate> out;
  for (Theorem t : kAllTheorems) {
    if (t == Theorem::E) {
      auto es = e_candidates(p, chain_tol);
      out.insert(out.end(), es.begin(), es.end());
    } else if (auto c = auto_candidate(p, t, chain_tol)) {
      out.push_back(std::move(*c));
    }
  }
  return out;
}

std::optional<std::size_t> select_best(const std::vector<BoundEntry>& entries) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].containment == Containment::Failed) continue;
    if (!best || better_disk(entries[i].disk, entries[*best].disk)) best = i;
  }
  return best;
}

BoundReport make_report(const Polynomial& p, const std::vector<Candidate>& candidates,
                        const RootSet* roots) {
  BoundReport report{p, {}, std::nullopt, kQualityMetric, std::nullopt};
  if (roots) report.roots = *roots;
  for (const auto& c : candidates) {
    BoundEntry e;
    e.params = c.params;
    e.disk = c.disk;
    if (roots) {
      e.verdict = containment(*roots, c.disk);
      e.containment = e.verdict.status;
      if (roots->converged && c.disk.radius > 0.0) e.tightness = tightness(*roots, c.disk);
      e.flagged = e.containment == Containment::Failed && p.leading() < 0.0;
    }
    report.entries.push_back(std::move(e));
  }
  report.best = select_best(report.entries);
  return report;
}

BoundReport best_bound(const Polynomial& p, const RootSet* roots, double chain_tol) {
  return make_report(p, applicable_bounds(p, chain_tol), roots);
}

}  // namespace ekbound

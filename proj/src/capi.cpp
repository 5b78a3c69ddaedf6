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

#include "ekbound/ekbound.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ekbound/error.hpp"
#include "ekbound/fuzz.hpp"
#include "ekbound/optimizer.hpp"
#include "ekbound/plot.hpp"
#include "ekbound/report.hpp"
#include "ekbound/roots.hpp"

struct ekb_polynomial {
  ekbound::Polynomial value;
};

struct ekb_rootset {
  ekbound::RootSet value;
};

struct ekb_report {
  ekbound::BoundReport value;
};

namespace {

using namespace ekbound;

thread_local std::string g_last_error;

ekb_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return EKB_MALFORMED_INPUT;
    case ErrorCode::DegenerateLeading: return EKB_DEGENERATE_LEADING;
    case ErrorCode::TooShort: return EKB_TOO_SHORT;
    case ErrorCode::HypothesisViolated: return EKB_HYPOTHESIS_VIOLATED;
    case ErrorCode::BadParam: return EKB_BAD_PARAM;
    case ErrorCode::Infeasible: return EKB_INFEASIBLE;
    case ErrorCode::NotConverged: return EKB_NOT_CONVERGED;
    case ErrorCode::ZeroRadius: return EKB_ZERO_RADIUS;
    case ErrorCode::IoError: return EKB_IO_ERROR;
  }
  return EKB_INTERNAL_ERROR;
}

ekb_status fail(ekb_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
ekb_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(EKB_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(EKB_INTERNAL_ERROR, e.what());
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

TheoremParams to_params(const ekb_params& p) {
  switch (p.theorem) {
    case EKB_THEOREM_A: return ParamsA{};
    case EKB_THEOREM_B: return ParamsB{};
    case EKB_THEOREM_C: return ParamsC{p.k};
    case EKB_THEOREM_D: return ParamsD{p.k, p.rho};
    case EKB_THEOREM_E: return ParamsE{p.rho, p.lambda};
    case EKB_THEOREM_COR1: return ParamsCor1{p.k, p.rho};
    case EKB_THEOREM_T1: return ParamsT1{p.alpha, p.beta};
    case EKB_THEOREM_T2: return ParamsT2{p.s, p.lambda};
    case EKB_THEOREM_T3: return ParamsT3{p.s, p.t, p.lambda};
  }
  throw Error(ErrorCode::BadParam, "unknown theorem selector");
}

ekb_params from_params(const TheoremParams& tp) {
  ekb_params out;
  ekb_params_init(&out, static_cast<ekb_theorem>(theorem_of(tp)));
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ParamsC>) {
          out.k = v.k;
        } else if constexpr (std::is_same_v<T, ParamsD> || std::is_same_v<T, ParamsCor1>) {
          out.k = v.k;
          out.rho = v.rho;
        } else if constexpr (std::is_same_v<T, ParamsE>) {
          out.rho = v.rho;
          out.lambda = v.lambda;
        } else if constexpr (std::is_same_v<T, ParamsT1>) {
          out.alpha = v.alpha;
          out.beta = v.beta;
        } else if constexpr (std::is_same_v<T, ParamsT2>) {
          out.s = v.s;
          out.lambda = v.lambda;
        } else if constexpr (std::is_same_v<T, ParamsT3>) {
          out.s = v.s;
          out.t = v.t;
          out.lambda = v.lambda;
        }
      },
      tp);
  return out;
}

ekb_disk to_c(const Disk& d) { return {d.center.real(), d.center.imag(), d.radius}; }

Disk from_c(const ekb_disk& d) { return {Complex(d.center_re, d.center_im), d.radius}; }

RootOptions solver_of(const ekb_solver_options* o) {
  RootOptions r;
  if (o) {
    r.tol = o->tol;
    r.max_iter = o->max_iter;
  }
  if (!(r.tol > 0.0) || r.max_iter < 1) {
    throw Error(ErrorCode::BadParam, "solver tolerance must be > 0 and max_iter >= 1");
  }
  return r;
}

Theorem theorem_from_c(ekb_theorem t) {
  if (t < EKB_THEOREM_A || t > EKB_THEOREM_T3) {
    throw Error(ErrorCode::BadParam, "unknown theorem selector");
  }
  return static_cast<Theorem>(t);
}

#define EKB_REQUIRE(cond)                                                  \
  do {                                                                     \
    if (!(cond)) return fail(EKB_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* ekb_status_string(ekb_status status) {
  switch (status) {
    case EKB_OK: return "Ok";
    case EKB_MALFORMED_INPUT: return "MalformedInput";
    case EKB_DEGENERATE_LEADING: return "DegenerateLeading";
    case EKB_TOO_SHORT: return "TooShort";
    case EKB_HYPOTHESIS_VIOLATED: return "HypothesisViolated";
    case EKB_BAD_PARAM: return "BadParam";
    case EKB_INFEASIBLE: return "Infeasible";
    case EKB_NOT_CONVERGED: return "NotConverged";
    case EKB_ZERO_RADIUS: return "ZeroRadius";
    case EKB_IO_ERROR: return "IoError";
    case EKB_INVALID_ARGUMENT: return "InvalidArgument";
    case EKB_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

const char* ekb_last_error(void) { return g_last_error.c_str(); }

void ekb_string_free(char* s) { std::free(s); }

const char* ekb_version(void) { return "0.1.0"; }

ekb_status ekb_polynomial_parse(const char* text, ekb_polynomial** out) {
  EKB_REQUIRE(text && out);
  return guarded([&] {
    *out = new ekb_polynomial{parse_polynomial(text)};
    return EKB_OK;
  });
}

ekb_status ekb_polynomial_create(const double* coeffs, size_t count, ekb_polynomial** out) {
  EKB_REQUIRE(out && (coeffs || count == 0));
  return guarded([&] {
    *out = new ekb_polynomial{Polynomial(std::vector<double>(coeffs, coeffs + count))};
    return EKB_OK;
  });
}

void ekb_polynomial_destroy(ekb_polynomial* p) { delete p; }

size_t ekb_polynomial_degree(const ekb_polynomial* p) { return p ? p->value.degree() : 0; }

ekb_status ekb_polynomial_coeffs(const ekb_polynomial* p, double* out, size_t capacity) {
  EKB_REQUIRE(p && out);
  const auto c = p->value.coeffs();
  if (capacity < c.size()) {
    return fail(EKB_INVALID_ARGUMENT, "buffer holds fewer than degree + 1 values");
  }
  std::copy(c.begin(), c.end(), out);
  return EKB_OK;
}

ekb_status ekb_polynomial_serialize(const ekb_polynomial* p, char** out) {
  EKB_REQUIRE(p && out);
  return guarded([&] {
    *out = dup_string(serialize(p->value));
    return EKB_OK;
  });
}

ekb_status ekb_polynomial_eval(const ekb_polynomial* p, double re, double im, double* out_re,
                               double* out_im) {
  EKB_REQUIRE(p && out_re && out_im);
  const Complex v = eval(p->value, Complex(re, im));
  *out_re = v.real();
  *out_im = v.imag();
  return EKB_OK;
}

ekb_status ekb_polynomial_one_minus_z(const ekb_polynomial* p, ekb_polynomial** out) {
  EKB_REQUIRE(p && out);
  return guarded([&] {
    *out = new ekb_polynomial{one_minus_z_product(p->value)};
    return EKB_OK;
  });
}

ekb_status ekb_theorem_parse(const char* id, ekb_theorem* out) {
  EKB_REQUIRE(id && out);
  const auto t = parse_theorem_id(id);
  if (!t) return fail(EKB_MALFORMED_INPUT, std::string("unknown theorem '") + id + "'");
  *out = static_cast<ekb_theorem>(*t);
  return EKB_OK;
}

const char* ekb_theorem_name(ekb_theorem theorem) {
  if (theorem < EKB_THEOREM_A || theorem > EKB_THEOREM_T3) return "?";
  return theorem_id(static_cast<Theorem>(theorem)).data();
}

void ekb_params_init(ekb_params* params, ekb_theorem theorem) {
  if (!params) return;
  *params = ekb_params{theorem, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1};
}

ekb_status ekb_check_hypothesis(const ekb_polynomial* p, const ekb_params* params,
                                double chain_tol, int* holds) {
  EKB_REQUIRE(p && params && holds);
  return guarded([&] {
    *holds = hypothesis(p->value, to_params(*params), chain_tol) ? 1 : 0;
    return EKB_OK;
  });
}

ekb_status ekb_compute_disk(const ekb_polynomial* p, const ekb_params* params, double chain_tol,
                            ekb_disk* out) {
  EKB_REQUIRE(p && params && out);
  return guarded([&] {
    *out = to_c(bound(p->value, to_params(*params), chain_tol));
    return EKB_OK;
  });
}

ekb_status ekb_auto_params(const ekb_polynomial* p, ekb_theorem theorem, double chain_tol,
                           ekb_params* out_params, ekb_disk* out_disk) {
  EKB_REQUIRE(p && out_params);
  return guarded([&] {
    const auto c = auto_candidate(p->value, theorem_from_c(theorem), chain_tol);
    if (!c) {
      throw Error(ErrorCode::Infeasible, "theorem " + std::string(theorem_id(
                                             static_cast<Theorem>(theorem))) +
                                             " does not apply to this polynomial");
    }
    *out_params = from_params(c->params);
    if (out_disk) *out_disk = to_c(c->disk);
    return EKB_OK;
  });
}

ekb_status ekb_feasible_lambdas(const ekb_polynomial* p, double chain_tol, int* out,
                                size_t capacity, size_t* count) {
  EKB_REQUIRE(p && count && (out || capacity == 0));
  return guarded([&] {
    const auto lambdas = feasible_lambdas(p->value, chain_tol);
    *count = lambdas.size();
    for (size_t i = 0; i < lambdas.size() && i < capacity; ++i) out[i] = lambdas[i];
    return EKB_OK;
  });
}

double ekb_disk_quality(const ekb_disk* d) { return d ? quality(from_c(*d)) : 0.0; }

void ekb_solver_options_init(ekb_solver_options* options) {
  if (!options) return;
  const RootOptions defaults;
  options->tol = defaults.tol;
  options->max_iter = defaults.max_iter;
}

ekb_status ekb_find_roots(const ekb_polynomial* p, const ekb_solver_options* options,
                          ekb_rootset** out) {
  EKB_REQUIRE(p && out);
  return guarded([&] {
    *out = new ekb_rootset{find_roots(p->value, solver_of(options))};
    if (!(*out)->value.converged) {
      return fail(EKB_NOT_CONVERGED, "root iteration did not converge; best iterate returned");
    }
    return EKB_OK;
  });
}

void ekb_rootset_destroy(ekb_rootset* rs) { delete rs; }

size_t ekb_rootset_size(const ekb_rootset* rs) { return rs ? rs->value.roots.size() : 0; }

ekb_status ekb_rootset_root(const ekb_rootset* rs, size_t i, double* re, double* im) {
  EKB_REQUIRE(rs && re && im && i < rs->value.roots.size());
  *re = rs->value.roots[i].real();
  *im = rs->value.roots[i].imag();
  return EKB_OK;
}

ekb_status ekb_rootset_residual(const ekb_rootset* rs, size_t i, double* residual) {
  EKB_REQUIRE(rs && residual && i < rs->value.residuals.size());
  *residual = rs->value.residuals[i];
  return EKB_OK;
}

int ekb_rootset_converged(const ekb_rootset* rs) { return rs && rs->value.converged ? 1 : 0; }

int ekb_rootset_iterations(const ekb_rootset* rs) { return rs ? rs->value.iterations : 0; }

ekb_status ekb_rootset_json(const ekb_rootset* rs, char** out) {
  EKB_REQUIRE(rs && out);
  return guarded([&] {
    *out = dup_string(format_json(roots_to_json(rs->value)));
    return EKB_OK;
  });
}

ekb_status ekb_containment_check(const ekb_rootset* rs, const ekb_disk* d, double rel_tol,
                                 double abs_tol, ekb_containment* out, double* excess) {
  EKB_REQUIRE(rs && d && out);
  const Verdict v = containment(rs->value, from_c(*d), rel_tol, abs_tol);
  *out = static_cast<ekb_containment>(v.status);
  if (excess) *excess = v.excess;
  return EKB_OK;
}

ekb_status ekb_tightness(const ekb_rootset* rs, const ekb_disk* d, double* out) {
  EKB_REQUIRE(rs && d && out);
  return guarded([&] {
    *out = tightness(rs->value, from_c(*d));
    return EKB_OK;
  });
}

void ekb_report_request_init(ekb_report_request* request) {
  if (!request) return;
  request->selection = nullptr;
  request->optimize = 0;
  request->verify = 0;
  request->chain_tol = 0.0;
  ekb_solver_options_init(&request->solver);
}

ekb_status ekb_report_build(const ekb_polynomial* p, const ekb_report_request* request,
                            ekb_report** out) {
  EKB_REQUIRE(p && request && out);
  return guarded([&] {
    const Polynomial& poly = p->value;
    const double tol = request->chain_tol;
    if (!(tol >= 0.0)) throw Error(ErrorCode::BadParam, "chain tolerance must be >= 0");

    std::vector<Candidate> candidates;
    if (request->selection) {
      const ekb_params& sel = *request->selection;
      if (request->optimize) {
        const Theorem t = theorem_from_c(sel.theorem);
        auto c = auto_candidate(poly, t, tol);
        if (!c) {
          throw Error(ErrorCode::Infeasible, "theorem " + std::string(theorem_id(t)) +
                                                 " does not apply to this polynomial");
        }
        candidates.push_back(std::move(*c));
      } else {
        const TheoremParams params = to_params(sel);
        candidates.push_back({params, bound(poly, params, tol)});
      }
    } else {
      candidates = applicable_bounds(poly, tol);
    }

    std::optional<RootSet> roots;
    if (request->verify) roots = find_roots(poly, solver_of(&request->solver));
    *out = new ekb_report{make_report(poly, candidates, roots ? &*roots : nullptr)};
    return EKB_OK;
  });
}

void ekb_report_destroy(ekb_report* report) { delete report; }

ekb_status ekb_report_counts_get(const ekb_report* report, ekb_report_counts* out) {
  EKB_REQUIRE(report && out);
  *out = ekb_report_counts{};
  for (const auto& e : report->value.entries) {
    ++out->entries;
    switch (e.containment) {
      case Containment::Contained: ++out->contained; break;
      case Containment::Failed:
        ++out->failed;
        if (e.flagged) ++out->failed_flagged;
        break;
      case Containment::Inconclusive: ++out->inconclusive; break;
      case Containment::Unchecked: ++out->unchecked; break;
    }
  }
  out->has_best = report->value.best ? 1 : 0;
  out->best = report->value.best.value_or(0);
  return EKB_OK;
}

ekb_status ekb_report_json(const ekb_report* report, char** out) {
  EKB_REQUIRE(report && out);
  return guarded([&] {
    *out = dup_string(format_json(report_to_json(report->value)));
    return EKB_OK;
  });
}

ekb_status ekb_report_write_svg(const ekb_report* report, const char* path) {
  EKB_REQUIRE(report && path);
  return guarded([&] {
    write_svg(report->value, path);
    return EKB_OK;
  });
}

ekb_status ekb_error_json(ekb_status status, const char* message, char** out) {
  EKB_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(format_json(error_to_json(ekb_status_string(status), message ? message : "")));
    return EKB_OK;
  });
}

void ekb_fuzz_config_init(ekb_fuzz_config* config) {
  if (!config) return;
  const FuzzConfig defaults;
  config->theorem = static_cast<ekb_theorem>(defaults.theorem);
  config->count = defaults.count;
  config->min_degree = defaults.min_degree;
  config->max_degree = defaults.max_degree;
  config->scale = defaults.scale;
  config->seed = defaults.seed;
  config->leading = EKB_LEADING_ANY;
  ekb_solver_options_init(&config->solver);
}

ekb_status ekb_fuzz_run(const ekb_fuzz_config* config, char** out_json,
                        ekb_fuzz_counts* out_counts) {
  EKB_REQUIRE(config && out_json);
  return guarded([&] {
    FuzzConfig c;
    c.theorem = theorem_from_c(config->theorem);
    c.count = config->count;
    c.min_degree = config->min_degree;
    c.max_degree = config->max_degree;
    c.scale = config->scale;
    c.seed = config->seed;
    switch (config->leading) {
      case EKB_LEADING_ANY: c.leading = LeadingSign::Any; break;
      case EKB_LEADING_POSITIVE: c.leading = LeadingSign::Positive; break;
      case EKB_LEADING_NEGATIVE: c.leading = LeadingSign::Negative; break;
      default: throw Error(ErrorCode::BadParam, "unknown leading-sign selector");
    }
    c.solver = solver_of(&config->solver);
    const FuzzSummary summary = run_fuzz(c);
    *out_json = dup_string(format_json(fuzz_to_json(summary)));
    if (out_counts) {
      *out_counts = {summary.passed, summary.failed, summary.failed_flagged,
                     summary.inconclusive};
    }
    return EKB_OK;
  });
}

}  // extern "C"

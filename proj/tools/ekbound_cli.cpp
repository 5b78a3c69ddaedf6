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

// ekbound: zero-location disk bounds for real polynomials.
//
// Exit codes: 0 ok, 1 malformed input or usage error, 2 hypothesis violated
// (or theorem inapplicable), 3 inconclusive root solve, 4 containment failed
// for a polynomial with a_n > 0.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ekbound/ekbound.h"

namespace {

enum Exit : int {
  kOk = 0,
  kInput = 1,
  kHypothesis = 2,
  kInconclusive = 3,
  kContainmentFailed = 4,
};

struct PolyDeleter {
  void operator()(ekb_polynomial* p) const { ekb_polynomial_destroy(p); }
};
struct ReportDeleter {
  void operator()(ekb_report* r) const { ekb_report_destroy(r); }
};
struct RootsDeleter {
  void operator()(ekb_rootset* r) const { ekb_rootset_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { ekb_string_free(s); }
};
using PolyPtr = std::unique_ptr<ekb_polynomial, PolyDeleter>;
using ReportPtr = std::unique_ptr<ekb_report, ReportDeleter>;
using RootsPtr = std::unique_ptr<ekb_rootset, RootsDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

int exit_code_for(ekb_status s) {
  switch (s) {
    case EKB_OK: return kOk;
    case EKB_HYPOTHESIS_VIOLATED:
    case EKB_INFEASIBLE: return kHypothesis;
    case EKB_NOT_CONVERGED: return kInconclusive;
    default: return kInput;
  }
}

struct Options {
  std::string coeffs;
  std::string theorem = "all";
  std::optional<double> alpha, beta, s, t, k, rho;
  std::optional<int> lambda;
  bool optimize = false;
  double chain_tol = 0.0;
  double tol = 1e-13;
  int max_iter = 1000;
  std::string out;

  // fuzz
  std::uint64_t count = 1000;
  std::uint64_t seed = 42;
  int min_degree = 2;
  int max_degree = 15;
  double scale = 10.0;
  std::string leading = "any";
};

bool emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << '\n';
    return true;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text << '\n';
  return static_cast<bool>(f);
}

int report_error(ekb_status status, const std::string& message) {
  char* raw = nullptr;
  if (ekb_error_json(status, message.c_str(), &raw) == EKB_OK) {
    CString json(raw);
    std::cout << json.get() << '\n';
  }
  std::cerr << "ekbound: " << ekb_status_string(status) << ": " << message << '\n';
  return exit_code_for(status);
}

int report_last_error(ekb_status status) { return report_error(status, ekb_last_error()); }

ekb_solver_options solver(const Options& o) {
  ekb_solver_options s;
  ekb_solver_options_init(&s);
  s.tol = o.tol;
  s.max_iter = o.max_iter;
  return s;
}

// Fills `params` from explicit flags; returns an error message if a flag the
// theorem needs is missing.
std::optional<std::string> explicit_params(const Options& o, ekb_params& params) {
  std::vector<std::string> missing;
  const auto need = [&](const auto& opt, const char* flag, auto& field) {
    if (opt) {
      field = *opt;
    } else {
      missing.emplace_back(flag);
    }
  };
  switch (params.theorem) {
    case EKB_THEOREM_A:
    case EKB_THEOREM_B: break;
    case EKB_THEOREM_C: need(o.k, "--k", params.k); break;
    case EKB_THEOREM_D:
    case EKB_THEOREM_COR1:
      need(o.k, "--k", params.k);
      need(o.rho, "--rho", params.rho);
      break;
    case EKB_THEOREM_E:
      need(o.rho, "--rho", params.rho);
      need(o.lambda, "--lambda", params.lambda);
      break;
    case EKB_THEOREM_T1:
      need(o.alpha, "--alpha", params.alpha);
      need(o.beta, "--beta", params.beta);
      break;
    case EKB_THEOREM_T2:
      need(o.s, "--s", params.s);
      need(o.lambda, "--lambda", params.lambda);
      break;
    case EKB_THEOREM_T3:
      need(o.s, "--s", params.s);
      need(o.t, "--t", params.t);
      need(o.lambda, "--lambda", params.lambda);
      break;
  }
  if (missing.empty()) return std::nullopt;
  std::string msg = std::string("theorem ") + ekb_theorem_name(params.theorem) + " needs";
  for (const auto& m : missing) msg += " " + m;
  return msg + " (or --optimize)";
}

enum class Mode { Bound, Verify, Plot };

int run_report(const Options& o, Mode mode) {
  ekb_polynomial* raw_poly = nullptr;
  if (auto st = ekb_polynomial_parse(o.coeffs.c_str(), &raw_poly); st != EKB_OK) {
    return report_last_error(st);
  }
  PolyPtr poly(raw_poly);

  ekb_report_request req;
  ekb_report_request_init(&req);
  req.verify = mode != Mode::Bound;
  req.optimize = o.optimize;
  req.chain_tol = o.chain_tol;
  req.solver = solver(o);

  ekb_params params;
  if (o.theorem != "all") {
    ekb_theorem theorem;
    if (auto st = ekb_theorem_parse(o.theorem.c_str(), &theorem); st != EKB_OK) {
      return report_last_error(st);
    }
    ekb_params_init(&params, theorem);
    if (!o.optimize) {
      if (auto missing = explicit_params(o, params)) {
        return report_error(EKB_BAD_PARAM, *missing);
      }
    }
    req.selection = &params;
  }

  ekb_report* raw_report = nullptr;
  if (auto st = ekb_report_build(poly.get(), &req, &raw_report); st != EKB_OK) {
    return report_last_error(st);
  }
  ReportPtr report(raw_report);

  if (mode == Mode::Plot) {
    if (auto st = ekb_report_write_svg(report.get(), o.out.c_str()); st != EKB_OK) {
      return report_last_error(st);
    }
  }

  char* raw_json = nullptr;
  if (auto st = ekb_report_json(report.get(), &raw_json); st != EKB_OK) {
    return report_last_error(st);
  }
  CString json(raw_json);
  if (!emit(json.get(), mode == Mode::Plot ? std::string() : o.out)) {
    return report_error(EKB_IO_ERROR, "cannot write '" + o.out + "'");
  }

  if (mode != Mode::Verify) return kOk;
  ekb_report_counts counts;
  ekb_report_counts_get(report.get(), &counts);
  if (counts.inconclusive > 0) return kInconclusive;
  if (counts.failed > counts.failed_flagged) return kContainmentFailed;
  return kOk;
}

int run_roots(const Options& o) {
  ekb_polynomial* raw_poly = nullptr;
  if (auto st = ekb_polynomial_parse(o.coeffs.c_str(), &raw_poly); st != EKB_OK) {
    return report_last_error(st);
  }
  PolyPtr poly(raw_poly);
  const ekb_solver_options opts = solver(o);
  ekb_rootset* raw_roots = nullptr;
  const ekb_status st = ekb_find_roots(poly.get(), &opts, &raw_roots);
  if (st != EKB_OK && st != EKB_NOT_CONVERGED) return report_last_error(st);
  RootsPtr roots(raw_roots);
  char* raw_json = nullptr;
  if (auto js = ekb_rootset_json(roots.get(), &raw_json); js != EKB_OK) {
    return report_last_error(js);
  }
  CString json(raw_json);
  if (!emit(json.get(), o.out)) return report_error(EKB_IO_ERROR, "cannot write '" + o.out + "'");
  return st == EKB_OK ? kOk : kInconclusive;
}

int run_fuzz(const Options& o) {
  ekb_fuzz_config cfg;
  ekb_fuzz_config_init(&cfg);
  if (o.theorem == "all") {
    return report_error(EKB_BAD_PARAM, "fuzz needs a single --theorem");
  }
  if (auto st = ekb_theorem_parse(o.theorem.c_str(), &cfg.theorem); st != EKB_OK) {
    return report_last_error(st);
  }
  cfg.count = o.count;
  cfg.seed = o.seed;
  cfg.min_degree = o.min_degree;
  cfg.max_degree = o.max_degree;
  cfg.scale = o.scale;
  cfg.solver = solver(o);
  if (o.leading == "any") {
    cfg.leading = EKB_LEADING_ANY;
  } else if (o.leading == "positive") {
    cfg.leading = EKB_LEADING_POSITIVE;
  } else {
    cfg.leading = EKB_LEADING_NEGATIVE;
  }
  char* raw_json = nullptr;
  ekb_fuzz_counts counts{};
  if (auto st = ekb_fuzz_run(&cfg, &raw_json, &counts); st != EKB_OK) {
    return report_last_error(st);
  }
  CString json(raw_json);
  if (!emit(json.get(), o.out)) return report_error(EKB_IO_ERROR, "cannot write '" + o.out + "'");
  return counts.failed > counts.failed_flagged ? kContainmentFailed : kOk;
}

void add_input_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("-c,--coeffs", o.coeffs,
                  "coefficients a_0,a_1,...,a_n in ascending power order, or "
                  "{\"coeffs\": [...]}")
      ->required();
}

void add_theorem_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--theorem", o.theorem, "a, b, c, d, e, cor1, t1, t2, t3 or all")
      ->check(CLI::IsMember({"a", "b", "c", "d", "e", "cor1", "t1", "t2", "t3", "all"}));
  cmd->add_option("--alpha", o.alpha, "Theorem t1 shift of a_n");
  cmd->add_option("--beta", o.beta, "Theorem t1 shift of a_0");
  cmd->add_option("--s", o.s, "Theorem t2/t3 shift of a_0");
  cmd->add_option("--t", o.t, "Theorem t3 shift of a_n");
  cmd->add_option("--lambda", o.lambda, "peak index for e, t2, t3");
  cmd->add_option("--k", o.k, "multiplier of a_n for c, d, cor1 (k >= 1)");
  cmd->add_option("--rho", o.rho, "multiplier of a_0 for d, e, cor1 (0 < rho <= 1)");
  cmd->add_flag("--optimize", o.optimize, "choose parameters minimizing |center| + radius");
  cmd->add_option("--chain-tol", o.chain_tol, "relax every chain comparison by this amount")
      ->check(CLI::NonNegativeNumber);
}

void add_solver_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol", o.tol, "root solver relative step tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", o.max_iter, "root solver iteration cap")
      ->check(CLI::PositiveNumber);
}

// CLI11 reads "-c -1,2,3" as two flags; glue value-taking flags to their
// value so coefficient lists and parameters may start with '-'.
std::vector<std::string> glue_values(int argc, char** argv) {
  static const char* kValued[] = {"-c",    "--coeffs", "--alpha", "--beta", "--s",
                                  "--t",   "--k",      "--rho",   "--lambda",
                                  "--chain-tol", "--tol"};
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    bool valued = false;
    for (const char* v : kValued) valued = valued || a == v;
    if (valued && i + 1 < argc && argv[i + 1][0] == '-') {
      args.push_back((a == "-c" ? std::string("--coeffs") : a) + "=" + argv[++i]);
    } else {
      args.push_back(std::move(a));
    }
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ekbound: coefficient-based disk bounds for the zeros of real polynomials.\n"
               "Coefficients are always listed in ascending power order: a_0,a_1,...,a_n."};
  app.require_subcommand(1);
  Options o;

  auto* bound = app.add_subcommand("bound", "print bound disks as a JSON report");
  add_input_flags(bound, o);
  add_theorem_flags(bound, o);
  bound->add_option("--out", o.out, "write the JSON report to this file");

  auto* verify = app.add_subcommand("verify", "bound disks plus root containment check");
  add_input_flags(verify, o);
  add_theorem_flags(verify, o);
  add_solver_flags(verify, o);
  verify->add_option("--out", o.out, "write the JSON report to this file");

  auto* plot = app.add_subcommand("plot", "draw roots and bound disks as SVG");
  add_input_flags(plot, o);
  add_theorem_flags(plot, o);
  add_solver_flags(plot, o);
  plot->add_option("--out", o.out, "SVG output path")->required();

  auto* roots = app.add_subcommand("roots", "compute all zeros (Aberth-Ehrlich)");
  add_input_flags(roots, o);
  add_solver_flags(roots, o);
  roots->add_option("--out", o.out, "write the JSON to this file");

  auto* fuzz = app.add_subcommand("fuzz", "seeded containment campaign for one theorem");
  fuzz->add_option("--theorem", o.theorem, "a, b, c, d, e, cor1, t1, t2 or t3")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c", "d", "e", "cor1", "t1", "t2", "t3"}));
  fuzz->add_option("--count", o.count, "number of instances");
  fuzz->add_option("--seed", o.seed, "mt19937_64 seed");
  fuzz->add_option("--min-degree", o.min_degree, "smallest degree (>= 2)");
  fuzz->add_option("--max-degree", o.max_degree, "largest degree");
  fuzz->add_option("--scale", o.scale, "coefficient magnitude scale");
  fuzz->add_option("--leading", o.leading, "sign of a_n: any, positive or negative")
      ->check(CLI::IsMember({"any", "positive", "negative"}));
  add_solver_flags(fuzz, o);
  fuzz->add_option("--out", o.out, "write the JSON summary to this file");

  auto args = glue_values(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ekbound: " << e.what() << "\n\n" << app.help();
    return kInput;
  }

  if (bound->parsed()) return run_report(o, Mode::Bound);
  if (verify->parsed()) return run_report(o, Mode::Verify);
  if (plot->parsed()) return run_report(o, Mode::Plot);
  if (roots->parsed()) return run_roots(o);
  return run_fuzz(o);
}

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

#include <regex>
#include <string>

#include "ekbound/error.hpp"
#include "ekbound/fuzz.hpp"
#include "ekbound/optimizer.hpp"
#include "ekbound/plot.hpp"
#include "ekbound/report.hpp"

using namespace ekbound;

namespace {

const Polynomial kQuintic({-1, 1, 2, 3, 4, 3});
const Polynomial kSextic({-2, 0, 1, 3, 2, 2, -1});

BoundReport single(const Polynomial& p, const TheoremParams& params, bool verify) {
  const RootSet rs = find_roots(p);
  const std::vector<Candidate> c{Candidate{params, bound(p, params)}};
  return make_report(p, c, verify ? &rs : nullptr);
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("report json schema") {
  const Json j = report_to_json(single(kQuintic, ParamsT1{2, 0}, true));
  CHECK(j["polynomial"]["coeffs"] == Json::array({-1, 1, 2, 3, 4, 3}));
  REQUIRE(j["entries"].size() == 1);
  const Json& e = j["entries"][0];
  CHECK(e["theorem"] == "t1");
  CHECK(e["params"]["alpha"] == 2.0);
  CHECK(e["params"]["beta"] == 0.0);
  CHECK(e["disk"]["center"][1] == 0.0);
  CHECK(e["containment"] == "contained");
  CHECK(e["tightness"].is_number());
  CHECK(j["best"] == 0);
  CHECK(j["quality_metric"] == kQualityMetric);

  const Json u = report_to_json(single(kQuintic, ParamsT1{2, 0}, false));
  CHECK(u["entries"][0]["containment"] == "unchecked");
  CHECK(u["entries"][0]["tightness"].is_null());
  CHECK_FALSE(u.contains("roots"));

  const Json none = report_to_json(best_bound(Polynomial({0, 3, 1, 2, 1})));
  CHECK(none["entries"].empty());
  CHECK(none["best"].is_null());
}

TEST_CASE("numbers are written with 17 significant digits") {
  const std::string text = format_json(report_to_json(single(kQuintic, ParamsT1{2, 0}, false)));
  CHECK(text.find("-0.66666666666666663") != std::string::npos);
  CHECK(text.find("2.3333333333333335") != std::string::npos);
}

TEST_CASE("report json round trips byte for byte") {
  for (const Polynomial& p : {kQuintic, kSextic, Polynomial({1, 2, 3}), Polynomial({0, 1, 2, 1})}) {
    const RootSet rs = find_roots(p);
    const BoundReport r = best_bound(p, &rs);
    const std::string text = format_json(report_to_json(r));
    const BoundReport back = report_from_json(Json::parse(text));
    CHECK(format_json(report_to_json(back)) == text);
    CHECK(back.best == r.best);
    CHECK(select_best(back.entries) == r.best);
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
      CHECK(back.entries[i].disk == r.entries[i].disk);
      CHECK(back.entries[i].params == r.entries[i].params);
    }
  }
}

TEST_CASE("malformed report json") {
  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"entries": []})")), Error);
  CHECK_THROWS_AS(
      report_from_json(Json::parse(
          R"({"polynomial": {"coeffs": [1, 2]}, "entries": [{"theorem": "zz"}], "best": null})")),
      Error);
}

TEST_CASE("error json") {
  const Json j = error_to_json("HypothesisViolated", "chain fails");
  CHECK(j["error"]["code"] == "HypothesisViolated");
  CHECK(j["error"]["message"] == "chain fails");
}

TEST_CASE("svg for the quintic fixture") {
  const std::string svg = render_svg(single(kQuintic, ParamsT1{2, 0}, true));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "class=\"root\"") == 5);
  CHECK(count(svg, "class=\"bound\"") == 1);
  CHECK(svg.find("data-theorem=\"t1\"") != std::string::npos);
  CHECK(svg.find("cx=\"-0.6667\" cy=\"0.0000\" r=\"2.3333\"") != std::string::npos);
  CHECK(svg.find("class=\"unit-circle\"") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  // viewport padded 10% beyond the disk: [-3, 1.6667] widened by 0.4667
  CHECK(svg.find("viewBox=\"-3.4667 -2.8000 5.6000 5.6000\"") != std::string::npos);
  CHECK(svg == render_svg(single(kQuintic, ParamsT1{2, 0}, true)));
}

TEST_CASE("svg for the sextic fixture and theorem b") {
  const std::string svg2 = render_svg(single(kSextic, ParamsT3{0, 1, 3}, true));
  CHECK(count(svg2, "class=\"root\"") == 6);
  CHECK(svg2.find("cx=\"2.0000\" cy=\"0.0000\" r=\"9.0000\"") != std::string::npos);

  const std::string svgb = render_svg(single(Polynomial({-1, 0, 1}), ParamsB{}, true));
  CHECK(svgb.find("class=\"root\" cx=\"-1.0000\" cy=\"0.0000\"") != std::string::npos);
  CHECK(svgb.find("class=\"root\" cx=\"1.0000\" cy=\"0.0000\"") != std::string::npos);
  CHECK(svgb.find("r=\"3.0000\"") != std::string::npos);
  CHECK(svgb.find("-0.0000") == std::string::npos);
}

TEST_CASE("write svg reports io errors") {
  const BoundReport r = single(kQuintic, ParamsT1{2, 0}, false);
  try {
    write_svg(r, "/nonexistent-dir/x.svg");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

TEST_CASE("fuzz determinism") {
  FuzzConfig c;
  c.theorem = Theorem::T3;
  c.count = 200;
  c.seed = 1234;
  const std::string a = format_json(fuzz_to_json(run_fuzz(c)));
  const std::string b = format_json(fuzz_to_json(run_fuzz(c)));
  CHECK(a == b);
  c.seed = 1235;
  CHECK(format_json(fuzz_to_json(run_fuzz(c))) != a);
}

TEST_CASE("fuzz instances satisfy their hypotheses") {
  for (Theorem t : kAllTheorems) {
    FuzzConfig c;
    c.theorem = t;
    c.leading = LeadingSign::Positive;
    c.seed = 77;
    InstanceGenerator gen(c);
    for (int i = 0; i < 300; ++i) {
      const FuzzInstance inst = gen.next();
      CHECK(theorem_of(inst.params) == t);
      CHECK(hypothesis(inst.polynomial, inst.params));
      CHECK(inst.polynomial.leading() > 0.0);
      CHECK(inst.polynomial.degree() >= 2);
      CHECK(inst.polynomial.degree() <= 15);
    }
  }
}

TEST_CASE("fuzz config validation") {
  FuzzConfig c;
  c.min_degree = 1;
  CHECK_THROWS_AS(validate(c), Error);
  c.min_degree = 5;
  c.max_degree = 4;
  CHECK_THROWS_AS(validate(c), Error);
  c = FuzzConfig{};
  c.scale = 0.0;
  CHECK_THROWS_AS(validate(c), Error);
  c = FuzzConfig{};
  c.theorem = Theorem::C;
  c.leading = LeadingSign::Negative;
  CHECK_THROWS_AS(validate(c), Error);
  c = FuzzConfig{};
  c.count = 0;
  const FuzzSummary s = run_fuzz(c);
  CHECK(s.passed + s.failed + s.inconclusive == 0);
}

TEST_CASE("fuzz with a_n < 0 flags failures instead of hiding them") {
  FuzzConfig c;
  c.theorem = Theorem::T1;
  c.leading = LeadingSign::Negative;
  c.count = 300;
  const FuzzSummary s = run_fuzz(c);
  CHECK(s.failed == s.failed_flagged);
  CHECK(s.passed + s.failed + s.inconclusive == 300);
}

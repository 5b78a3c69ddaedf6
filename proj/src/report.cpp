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

#include "ekbound/report.hpp"

#include <cmath>
#include <cstdio>

namespace ekbound {

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::MalformedInput, "expected [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double number_at(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) {
    throw Error(ErrorCode::MalformedInput, std::string("missing numeric field \"") + key + "\"");
  }
  return it->get<double>();
}

int int_at(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    throw Error(ErrorCode::MalformedInput, std::string("missing integer field \"") + key + "\"");
  }
  return it->get<int>();
}

const Json& field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::MalformedInput, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

Containment containment_from_string(const std::string& s) {
  for (Containment c : {Containment::Contained, Containment::Failed, Containment::Inconclusive,
                        Containment::Unchecked}) {
    if (to_string(c) == s) return c;
  }
  throw Error(ErrorCode::MalformedInput, "unknown containment verdict '" + s + "'");
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_flat(const Json& j) {
  for (const auto& v : j) {
    if (v.is_structured()) return false;
  }
  return true;
}

void write(std::string& out, const Json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent <= 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent > 0 ? ": " : ":";
        write(out, value, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = is_flat(j);
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += flat && indent > 0 ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(out, value, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

Json params_to_json(const TheoremParams& params) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ParamsA> || std::is_same_v<T, ParamsB>)
          return Json::object();
        else if constexpr (std::is_same_v<T, ParamsC>) return {{"k", v.k}};
        else if constexpr (std::is_same_v<T, ParamsD> || std::is_same_v<T, ParamsCor1>)
          return {{"k", v.k}, {"rho", v.rho}};
        else if constexpr (std::is_same_v<T, ParamsE>)
          return {{"rho", v.rho}, {"lambda", v.lambda}};
        else if constexpr (std::is_same_v<T, ParamsT1>)
          return {{"alpha", v.alpha}, {"beta", v.beta}};
        else if constexpr (std::is_same_v<T, ParamsT2>) return {{"s", v.s}, {"lambda", v.lambda}};
        else
          return {{"s", v.s}, {"t", v.t}, {"lambda", v.lambda}};
      },
      params);
}

TheoremParams params_from_json(Theorem theorem, const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, "params must be an object");
  switch (theorem) {
    case Theorem::A: return ParamsA{};
    case Theorem::B: return ParamsB{};
    case Theorem::C: return ParamsC{number_at(j, "k")};
    case Theorem::D: return ParamsD{number_at(j, "k"), number_at(j, "rho")};
    case Theorem::E: return ParamsE{number_at(j, "rho"), int_at(j, "lambda")};
    case Theorem::Cor1: return ParamsCor1{number_at(j, "k"), number_at(j, "rho")};
    case Theorem::T1: return ParamsT1{number_at(j, "alpha"), number_at(j, "beta")};
    case Theorem::T2: return ParamsT2{number_at(j, "s"), int_at(j, "lambda")};
    case Theorem::T3:
      return ParamsT3{number_at(j, "s"), number_at(j, "t"), int_at(j, "lambda")};
  }
  throw Error(ErrorCode::MalformedInput, "unknown theorem");
}

Json disk_to_json(const Disk& d) {
  return {{"center", complex_to_json(d.center)}, {"radius", d.radius}};
}

Json roots_to_json(const RootSet& rs) {
  Json values = Json::array();
  for (const Complex& r : rs.roots) values.push_back(complex_to_json(r));
  return {{"values", values},
          {"residuals", rs.residuals},
          {"iterations", rs.iterations},
          {"converged", rs.converged}};
}

Json report_to_json(const BoundReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json entry = {{"theorem", std::string(theorem_id(theorem_of(e.params)))},
                  {"params", params_to_json(e.params)},
                  {"disk", disk_to_json(e.disk)},
                  {"quality", quality(e.disk)},
                  {"containment", std::string(to_string(e.containment))},
                  {"tightness", e.tightness ? Json(*e.tightness) : Json(nullptr)}};
    if (e.containment == Containment::Failed && e.verdict.worst_root && report.roots) {
      entry["failure"] = {{"root", complex_to_json(report.roots->roots[*e.verdict.worst_root])},
                          {"root_index", *e.verdict.worst_root},
                          {"excess", e.verdict.excess},
                          {"flagged", e.flagged}};
    }
    entries.push_back(std::move(entry));
  }
  const auto c = report.polynomial.coeffs();
  Json out = {{"polynomial", {{"coeffs", std::vector<double>(c.begin(), c.end())}}},
              {"quality_metric", report.quality_metric},
              {"entries", entries},
              {"best", report.best ? Json(*report.best) : Json(nullptr)}};
  if (report.roots) out["roots"] = roots_to_json(*report.roots);
  return out;
}

BoundReport report_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, "report must be a JSON object");
  const Json& coeffs = field(field(j, "polynomial"), "coeffs");
  std::vector<double> a;
  for (const auto& v : coeffs) {
    if (!v.is_number()) throw Error(ErrorCode::MalformedInput, "non-numeric coefficient");
    a.push_back(v.get<double>());
  }
  BoundReport report{Polynomial(std::move(a)), {}, std::nullopt, kQualityMetric, std::nullopt};
  report.quality_metric = field(j, "quality_metric").get<std::string>();

  if (const auto it = j.find("roots"); it != j.end()) {
    RootSet rs;
    for (const auto& v : field(*it, "values")) rs.roots.push_back(complex_from_json(v));
    for (const auto& v : field(*it, "residuals")) rs.residuals.push_back(v.get<double>());
    rs.iterations = int_at(*it, "iterations");
    rs.converged = field(*it, "converged").get<bool>();
    report.roots = std::move(rs);
  }

  for (const auto& ej : field(j, "entries")) {
    const auto id = field(ej, "theorem").get<std::string>();
    const auto theorem = parse_theorem_id(id);
    if (!theorem) throw Error(ErrorCode::MalformedInput, "unknown theorem id '" + id + "'");
    BoundEntry e;
    e.params = params_from_json(*theorem, field(ej, "params"));
    const Json& dj = field(ej, "disk");
    e.disk = Disk{complex_from_json(field(dj, "center")), number_at(dj, "radius")};
    e.containment = containment_from_string(field(ej, "containment").get<std::string>());
    e.verdict.status = e.containment;
    if (const Json& t = field(ej, "tightness"); !t.is_null()) e.tightness = t.get<double>();
    if (const auto f = ej.find("failure"); f != ej.end()) {
      e.verdict.worst_root = field(*f, "root_index").get<std::size_t>();
      e.verdict.excess = number_at(*f, "excess");
      e.flagged = field(*f, "flagged").get<bool>();
    }
    report.entries.push_back(std::move(e));
  }
  if (const Json& b = field(j, "best"); !b.is_null()) report.best = b.get<std::size_t>();
  return report;
}

Json error_to_json(std::string_view code, std::string_view message) {
  return {{"error", {{"code", std::string(code)}, {"message", std::string(message)}}}};
}

std::string format_json(const Json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  return out;
}

}  // namespace ekbound

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

#include "ekbound/polynomial.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include <json.hpp>

#include "ekbound/error.hpp"

namespace ekbound {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) {
    throw Error(ErrorCode::MalformedInput, "empty coefficient token");
  }
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw Error(ErrorCode::MalformedInput,
                "not a finite decimal literal: '" + std::string(token) + "'");
  }
  return value;
}

std::vector<double> parse_json_coeffs(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  const nlohmann::json* array = &doc;
  if (doc.is_object()) {
    const auto it = doc.find("coeffs");
    if (it == doc.end()) {
      throw Error(ErrorCode::MalformedInput, "JSON object has no \"coeffs\" field");
    }
    array = &*it;
  }
  if (!array->is_array()) {
    throw Error(ErrorCode::MalformedInput, "\"coeffs\" must be an array of numbers");
  }
  std::vector<double> coeffs;
  coeffs.reserve(array->size());
  for (const auto& v : *array) {
    if (!v.is_number()) {
      throw Error(ErrorCode::MalformedInput, "non-numeric coefficient " + v.dump());
    }
    coeffs.push_back(v.get<double>());
  }
  return coeffs;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double c : coeffs_) {
    if (!std::isfinite(c)) {
      throw Error(ErrorCode::MalformedInput, "coefficients must be finite");
    }
  }
  if (coeffs_.size() < 2) {
    throw Error(ErrorCode::TooShort, "need at least two coefficients (degree >= 1)");
  }
  if (coeffs_.back() == 0.0) {
    throw Error(ErrorCode::DegenerateLeading, "leading coefficient a_n must be nonzero");
  }
}

Complex eval(const Polynomial& p, Complex z) noexcept {
  const auto a = p.coeffs();
  Complex acc = a.back();
  for (std::size_t j = a.size() - 1; j-- > 0;) {
    acc = acc * z + a[j];
  }
  return acc;
}

Polynomial one_minus_z_product(const Polynomial& p) {
  const auto a = p.coeffs();
  std::vector<double> g(a.size() + 1);
  g[0] = a[0];
  for (std::size_t j = 1; j < a.size(); ++j) g[j] = a[j] - a[j - 1];
  g.back() = -a.back();
  return Polynomial(std::move(g));
}

Polynomial parse_polynomial(std::string_view text) {
  text = trim(text);
  if (text.empty()) {
    throw Error(ErrorCode::MalformedInput, "empty coefficient list");
  }
  if (text.front() == '{' || text.front() == '[') {
    return Polynomial(parse_json_coeffs(text));
  }
  std::vector<double> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coeffs.push_back(parse_number(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

std::string serialize(const Polynomial& p) {
  std::string out;
  char buf[32];
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    if (j) out += ',';
    const auto res = std::to_chars(buf, buf + sizeof buf, p[j]);
    out.append(buf, res.ptr);
  }
  return out;
}

}  // namespace ekbound

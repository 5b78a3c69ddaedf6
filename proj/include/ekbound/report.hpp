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

#include <string>

#include <json.hpp>

#include "ekbound/error.hpp"
#include "ekbound/optimizer.hpp"

namespace ekbound {

using Json = nlohmann::ordered_json;

// Report layout:
//   {"polynomial": {"coeffs": [...]},
//    "quality_metric": "center_modulus_plus_radius",
//    "entries": [{"theorem": "t1", "params": {...},
//                 "disk": {"center": [re, im], "radius": r}, "quality": q,
//                 "containment": "contained|failed|inconclusive|unchecked",
//                 "tightness": x|null,
//                 "failure": {...}          // only when containment == failed
//                }],
//    "best": index|null,
//    "roots": {...}}                        // only when roots were computed

Json params_to_json(const TheoremParams& params);
/// Throws Error(MalformedInput) on missing or mistyped fields.
TheoremParams params_from_json(Theorem theorem, const Json& j);

Json disk_to_json(const Disk& d);
Json roots_to_json(const RootSet& rs);
Json report_to_json(const BoundReport& report);

/// Inverse of report_to_json (used to re-derive quality and ordering from
/// emitted reports). Throws Error(MalformedInput).
BoundReport report_from_json(const Json& j);

Json error_to_json(std::string_view code, std::string_view message);

/// Serializes with every floating-point number printed at 17 significant
/// digits, so parsing the text reproduces the exact doubles.
std::string format_json(const Json& j, int indent = 2);

}  // namespace ekbound

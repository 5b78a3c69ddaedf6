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

#include "ekbound/optimizer.hpp"

namespace ekbound {

/// Standalone SVG of the complex plane: both axes, the dashed unit circle,
/// every bound disk of `report` as a labelled circle and every root in
/// `report.roots` as a marker. The viewport is the bounding box of all of
/// these padded by 10% on each side. Coordinates carry 4 decimals and the
/// output is a pure function of the report.
std::string render_svg(const BoundReport& report);

/// Throws Error(IoError) when `path` cannot be written.
void write_svg(const BoundReport& report, const std::string& path);

}  // namespace ekbound

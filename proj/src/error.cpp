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

#include "ekbound/error.hpp"

namespace ekbound {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DegenerateLeading: return "DegenerateLeading";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::ZeroRadius: return "ZeroRadius";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ekbound

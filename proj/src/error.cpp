// Copyright 2026 The ordbelief Authors
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

#include "ordbelief/error.hpp"

namespace ordbelief {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::TotalConflict: return "TotalConflict";
    case ErrorCode::FrameMismatch: return "FrameMismatch";
    case ErrorCode::EmptyElement: return "EmptyElement";
    case ErrorCode::InvalidDelta: return "InvalidDelta";
    case ErrorCode::NegativeQuadraticForm: return "NegativeQuadraticForm";
    case ErrorCode::EmptyCandidates: return "EmptyCandidates";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::TooFewInputs: return "TooFewInputs";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownElement: return "UnknownElement";
  }
  return "Unknown";
}

}  // namespace ordbelief

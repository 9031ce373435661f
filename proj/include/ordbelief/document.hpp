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

#pragma once

#include <string>
#include <string_view>

#include "ordbelief/mass.hpp"

namespace ordbelief {

// Mass document, UTF-8 JSON:
//
//   {"frame": ["low", "mid", "high"],
//    "masses": [{"focal": "w2", "mass": 0.4}, {"focal": "w1..w2", "mass": 0.6}]}
//
// The order of "frame" is the ordinal order. An optional "meta" object is
// carried for information only.

struct DocumentOptions {
  bool renormalize = false;
};

/// Throws ParseError (with line/column or field path), UnknownElement,
/// NotNormalized, NegativeMass or InvalidFrame.
MassFunction parse_mass_document(std::string_view text, DocumentOptions options = {});

/// Focal elements in canonical order, masses rounded to 12 significant digits.
/// `conformant = false` adds "meta": {"conformant": false}.
std::string emit_mass_document(const MassFunction& m, bool conformant = true);

/// Fixed 12-significant-digit decimal used for all numeric text output.
std::string format_number(double v);

/// v rounded to 12 significant digits.
double round12(double v);

}  // namespace ordbelief

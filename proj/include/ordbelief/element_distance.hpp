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

#include <cstddef>
#include <optional>
#include <string_view>

#include "ordbelief/frame.hpp"

namespace ordbelief {

/// How the distance from a state to an interval is aggregated over the
/// interval's members.
enum class ElementDistanceMode {
  Min,
  Max,
  Average,
};

std::string_view to_string(ElementDistanceMode mode) noexcept;
/// Accepts "min", "max", "avg".
std::optional<ElementDistanceMode> parse_distance_mode(std::string_view text) noexcept;

/// |i - j| / (n - 1), normalized rank distance between two states. Zero on a
/// one-state frame. Throws OutOfRange.
double d_singleton(Ordinal i, Ordinal j, std::size_t n);

/// Distance from state i to a non-empty interval x. Min and Max look at the
/// two endpoints of x; Average averages over all members of x.
/// Throws EmptyElement.
double d_elem(Ordinal i, OrderedElement x, ElementDistanceMode mode, std::size_t n);

/// Distance between two non-empty intervals. Average is the mean pairwise
/// rank distance over x × y. Throws EmptyElement.
double d_set(OrderedElement x, OrderedElement y, ElementDistanceMode mode, std::size_t n);

}  // namespace ordbelief

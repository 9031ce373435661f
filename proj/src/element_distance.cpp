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

#include "ordbelief/element_distance.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ordbelief/error.hpp"

namespace ordbelief {

std::string_view to_string(ElementDistanceMode mode) noexcept {
  switch (mode) {
    case ElementDistanceMode::Min: return "min";
    case ElementDistanceMode::Max: return "max";
    case ElementDistanceMode::Average: return "avg";
  }
  return "avg";
}

std::optional<ElementDistanceMode> parse_distance_mode(std::string_view text) noexcept {
  if (text == "min") return ElementDistanceMode::Min;
  if (text == "max") return ElementDistanceMode::Max;
  if (text == "avg") return ElementDistanceMode::Average;
  return std::nullopt;
}

double d_singleton(Ordinal i, Ordinal j, std::size_t n) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw Error(ErrorCode::OutOfRange, "ordinals " + std::to_string(i) + ", " +
                                           std::to_string(j) + " outside frame of " +
                                           std::to_string(n));
  if (n == 1) return 0.0;
  const auto gap = i > j ? i - j : j - i;
  return static_cast<double>(gap) / static_cast<double>(n - 1);
}

namespace {

void require_non_empty(OrderedElement x) {
  if (x.is_empty()) throw Error(ErrorCode::EmptyElement, "distance to the empty set is undefined");
}

}  // namespace

double d_elem(Ordinal i, OrderedElement x, ElementDistanceMode mode, std::size_t n) {
  require_non_empty(x);
  switch (mode) {
    case ElementDistanceMode::Min:
      return std::min(d_singleton(i, x.lo(), n), d_singleton(i, x.hi(), n));
    case ElementDistanceMode::Max:
      return std::max(d_singleton(i, x.lo(), n), d_singleton(i, x.hi(), n));
    case ElementDistanceMode::Average: {
      double sum = 0.0;
      for (Ordinal k = x.lo(); k <= x.hi(); ++k) sum += d_singleton(i, k, n);
      return sum / static_cast<double>(cardinality(x));
    }
  }
  return 0.0;
}

double d_set(OrderedElement x, OrderedElement y, ElementDistanceMode mode, std::size_t n) {
  require_non_empty(x);
  require_non_empty(y);
  switch (mode) {
    case ElementDistanceMode::Min: {
      // Taken over both directions; the one-sided form is asymmetric when the
      // intervals overlap. On disjoint intervals both directions agree.
      double best = 1.0;
      for (Ordinal k = y.lo(); k <= y.hi(); ++k) best = std::min(best, d_elem(k, x, mode, n));
      for (Ordinal k = x.lo(); k <= x.hi(); ++k) best = std::min(best, d_elem(k, y, mode, n));
      return best;
    }
    case ElementDistanceMode::Max: {
      double worst = 0.0;
      for (Ordinal k = y.lo(); k <= y.hi(); ++k) worst = std::max(worst, d_elem(k, x, mode, n));
      return worst;
    }
    case ElementDistanceMode::Average: {
      double sum = 0.0;
      for (Ordinal kx = x.lo(); kx <= x.hi(); ++kx)
        for (Ordinal ky = y.lo(); ky <= y.hi(); ++ky) sum += d_singleton(kx, ky, n);
      return sum / static_cast<double>(cardinality(x) * cardinality(y));
    }
  }
  return 0.0;
}

}  // namespace ordbelief

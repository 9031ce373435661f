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

#include "ordbelief/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ordbelief/error.hpp"

namespace ordbelief {

FuzzyParams FuzzyParams::create(double alpha, double gamma, ElementDistanceMode mode,
                                bool allow_wide_gamma) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw Error(ErrorCode::InvalidParams, "alpha must lie in [0, 1], got " + std::to_string(alpha));
  const bool gamma_ok = allow_wide_gamma ? (gamma >= 0.0 && std::isfinite(gamma))
                                         : (gamma >= 0.0 && gamma <= 1.0);
  if (!gamma_ok)
    throw Error(ErrorCode::InvalidParams, "gamma must lie in [0, 1], got " + std::to_string(gamma));
  return FuzzyParams(alpha, gamma, mode);
}

double membership(Ordinal i, OrderedElement x, const FuzzyParams& params, std::size_t n) {
  if (x.is_empty()) throw Error(ErrorCode::EmptyElement, "membership in the empty set");
  if (i < 1 || i > n) throw Error(ErrorCode::OutOfRange, "ordinal outside frame");
  if (contains(x, i)) return 1.0;
  if (params.alpha() == 0.0) return 0.0;
  return params.alpha() * std::exp(-params.gamma() * d_elem(i, x, params.mode(), n));
}

double fuzzy_intersection_cardinality(OrderedElement x, OrderedElement y,
                                      const FuzzyParams& params, std::size_t n) {
  if (x.is_empty() || y.is_empty())
    throw Error(ErrorCode::EmptyElement, "fuzzy cardinality needs non-empty elements");
  if (!x.fits(n) || !y.fits(n))
    throw Error(ErrorCode::FrameMismatch, "element outside frame of " + std::to_string(n));
  const auto support = ordered_union(x, y);
  double sum = 0.0;
  for (Ordinal k = support.lo(); k <= support.hi(); ++k)
    sum += std::min(membership(k, x, params, n), membership(k, y, params, n));
  return sum;
}

}  // namespace ordbelief

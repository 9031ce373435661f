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

#include "ordbelief/element_distance.hpp"
#include "ordbelief/frame.hpp"

namespace ordbelief {

/// Parameters of the membership function of a state to an interval:
/// mu_X(w) = 1 inside X, alpha * exp(-gamma * d(w, X)) outside.
class FuzzyParams {
 public:
  /// alpha = 0: crisp membership.
  FuzzyParams() = default;

  /// Requires alpha and gamma in [0, 1]. With allow_wide_gamma any finite
  /// gamma >= 0 is accepted and the params report !conformant().
  /// Throws InvalidParams.
  static FuzzyParams create(double alpha, double gamma,
                            ElementDistanceMode mode = ElementDistanceMode::Average,
                            bool allow_wide_gamma = false);

  double alpha() const noexcept { return alpha_; }
  double gamma() const noexcept { return gamma_; }
  ElementDistanceMode mode() const noexcept { return mode_; }
  bool conformant() const noexcept { return gamma_ <= 1.0; }

  friend bool operator==(const FuzzyParams&, const FuzzyParams&) = default;

 private:
  FuzzyParams(double alpha, double gamma, ElementDistanceMode mode)
      : alpha_(alpha), gamma_(gamma), mode_(mode) {}

  double alpha_ = 0.0;
  double gamma_ = 0.0;
  ElementDistanceMode mode_ = ElementDistanceMode::Average;
};

/// Membership degree of state i in the non-empty interval x.
/// Throws EmptyElement or OutOfRange.
double membership(Ordinal i, OrderedElement x, const FuzzyParams& params, std::size_t n);

/// |x ∩ y|_o: sum over the states of x ∪o y of min(mu_x, mu_y). Reduces to
/// |x ∩ y| when alpha = 0. Throws EmptyElement.
double fuzzy_intersection_cardinality(OrderedElement x, OrderedElement y,
                                      const FuzzyParams& params, std::size_t n);

}  // namespace ordbelief

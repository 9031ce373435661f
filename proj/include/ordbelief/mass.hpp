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

#include <span>
#include <utility>
#include <vector>

#include "ordbelief/frame.hpp"

namespace ordbelief {

/// Tolerance on the total mass of a normalized mass function.
inline constexpr double kNormTolerance = 1e-9;

struct FocalMass {
  OrderedElement element;
  double mass = 0.0;
};

/// A normalized mass function on the ordered power set of a frame. Only
/// strictly positive masses are stored; they are the focal elements, kept in
/// canonical enumeration order. Mass on the empty set is allowed.
class MassFunction {
 public:
  /// Drops zero masses, sums duplicate elements and checks that the total is
  /// 1 within kNormTolerance. Throws InvalidElement, NegativeMass or
  /// NotNormalized.
  static MassFunction make(OrderedFrame frame, std::span<const FocalMass> entries);

  /// Like make() but rescales the entries so they sum to exactly 1. Throws
  /// NotNormalized if the total is zero.
  static MassFunction renormalized(OrderedFrame frame, std::span<const FocalMass> entries);

  const OrderedFrame& frame() const noexcept { return frame_; }
  std::size_t frame_size() const noexcept { return frame_.size(); }

  /// Focal elements with their masses, in canonical order.
  std::span<const FocalMass> focals() const noexcept { return focals_; }

  /// m(x); zero when x is not focal.
  double mass_of(OrderedElement x) const noexcept;
  double empty_mass() const noexcept { return mass_of(OrderedElement::empty()); }

  /// Dense vector of masses indexed by the canonical enumeration.
  std::vector<double> to_vector() const;

 private:
  MassFunction(OrderedFrame frame, std::vector<FocalMass> focals)
      : frame_(std::move(frame)), focals_(std::move(focals)) {}

  OrderedFrame frame_;
  std::vector<FocalMass> focals_;
};

inline MassFunction make_mass(OrderedFrame frame, std::span<const FocalMass> entries) {
  return MassFunction::make(std::move(frame), entries);
}

/// m_x, the mass function with m(x) = 1. Throws EmptyElement for x = empty.
MassFunction categorical(const OrderedFrame& frame, OrderedElement x);

/// Total ignorance: m(Omega) = 1.
MassFunction vacuous(const OrderedFrame& frame);

/// Credibility: sum of m(y) over non-empty y ⊆ x.
double bel(const MassFunction& m, OrderedElement x);

/// Plausibility: sum of m(y) over y meeting x. Computed directly, not as a
/// dual of bel, since the ordered power set is not closed under complement.
double pl(const MassFunction& m, OrderedElement x);

/// Pignistic probability of state i. Throws TotalConflict if m(empty) = 1.
double betp(const MassFunction& m, Ordinal i);

/// Throws FrameMismatch unless both mass functions share one frame.
void require_same_frame(const MassFunction& a, const MassFunction& b);

}  // namespace ordbelief

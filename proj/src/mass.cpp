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

#include "ordbelief/mass.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "ordbelief/error.hpp"

namespace ordbelief {

namespace {

std::map<OrderedElement, double, CanonicalLess> accumulate(const OrderedFrame& frame,
                                                           std::span<const FocalMass> entries) {
  std::map<OrderedElement, double, CanonicalLess> acc;
  for (const auto& [element, mass] : entries) {
    if (!element.fits(frame.size()))
      throw Error(ErrorCode::InvalidElement,
                  "element " + to_string(element) + " is not in the frame");
    if (!(mass >= 0.0) || !std::isfinite(mass))
      throw Error(ErrorCode::NegativeMass,
                  "mass of " + to_string(element) + " must be a finite non-negative number");
    if (mass > 0.0) acc[element] += mass;
  }
  return acc;
}

double total(const std::map<OrderedElement, double, CanonicalLess>& acc) {
  double sum = 0.0;
  for (const auto& kv : acc) sum += kv.second;
  return sum;
}

}  // namespace

MassFunction MassFunction::make(OrderedFrame frame, std::span<const FocalMass> entries) {
  const auto acc = accumulate(frame, entries);
  const double sum = total(acc);
  if (std::abs(sum - 1.0) > kNormTolerance)
    throw Error(ErrorCode::NotNormalized, "masses sum to " + std::to_string(sum) + ", not 1");
  std::vector<FocalMass> focals;
  focals.reserve(acc.size());
  for (const auto& [e, v] : acc) focals.push_back({e, v});
  return MassFunction(std::move(frame), std::move(focals));
}

MassFunction MassFunction::renormalized(OrderedFrame frame, std::span<const FocalMass> entries) {
  const auto acc = accumulate(frame, entries);
  const double sum = total(acc);
  if (sum <= 0.0) throw Error(ErrorCode::NotNormalized, "cannot renormalize a zero mass function");
  std::vector<FocalMass> focals;
  focals.reserve(acc.size());
  for (const auto& [e, v] : acc) focals.push_back({e, v / sum});
  return MassFunction(std::move(frame), std::move(focals));
}

double MassFunction::mass_of(OrderedElement x) const noexcept {
  const auto it = std::lower_bound(
      focals_.begin(), focals_.end(), x,
      [](const FocalMass& f, OrderedElement e) { return index_of(f.element) < index_of(e); });
  return (it != focals_.end() && it->element == x) ? it->mass : 0.0;
}

std::vector<double> MassFunction::to_vector() const {
  std::vector<double> v(ops_size(frame_.size()), 0.0);
  for (const auto& f : focals_) v[index_of(f.element)] = f.mass;
  return v;
}

MassFunction categorical(const OrderedFrame& frame, OrderedElement x) {
  if (x.is_empty())
    throw Error(ErrorCode::EmptyElement, "categorical mass on the empty set; use make_mass");
  const FocalMass entry{x, 1.0};
  return MassFunction::make(frame, std::span(&entry, 1));
}

MassFunction vacuous(const OrderedFrame& frame) {
  return categorical(frame, OrderedElement::whole(frame));
}

double bel(const MassFunction& m, OrderedElement x) {
  double sum = 0.0;
  for (const auto& [y, v] : m.focals())
    if (!y.is_empty() && subset(y, x)) sum += v;
  return sum;
}

double pl(const MassFunction& m, OrderedElement x) {
  double sum = 0.0;
  for (const auto& [y, v] : m.focals())
    if (!intersect(y, x).is_empty()) sum += v;
  return sum;
}

double betp(const MassFunction& m, Ordinal i) {
  if (i < 1 || i > m.frame_size())
    throw Error(ErrorCode::OutOfRange, "ordinal " + std::to_string(i) + " outside frame");
  const double denom = 1.0 - m.empty_mass();
  if (denom <= kNormTolerance)
    throw Error(ErrorCode::TotalConflict, "pignistic probability undefined when m(empty) = 1");
  double sum = 0.0;
  for (const auto& [x, v] : m.focals())
    if (contains(x, i)) sum += v / static_cast<double>(cardinality(x));
  return sum / denom;
}

void require_same_frame(const MassFunction& a, const MassFunction& b) {
  if (!(a.frame() == b.frame()))
    throw Error(ErrorCode::FrameMismatch, "mass functions are defined on different frames");
}

}  // namespace ordbelief

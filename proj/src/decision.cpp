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

#include "ordbelief/decision.hpp"

#include <algorithm>
#include <string>

#include "ordbelief/error.hpp"

namespace ordbelief {

std::string_view to_string(PointwiseCriterion c) noexcept {
  switch (c) {
    case PointwiseCriterion::Bel: return "bel";
    case PointwiseCriterion::Pl: return "pl";
    case PointwiseCriterion::BetP: return "betp";
  }
  return "betp";
}

PointwiseDecision decide_pointwise(const MassFunction& m, PointwiseCriterion criterion) {
  if (1.0 - m.empty_mass() <= kNormTolerance)
    throw Error(ErrorCode::TotalConflict, "no decision under total conflict");
  PointwiseDecision out;
  const auto n = static_cast<Ordinal>(m.frame_size());
  out.scores.reserve(n);
  for (Ordinal i = 1; i <= n; ++i) {
    const auto w = OrderedElement::singleton(i);
    double s = 0.0;
    switch (criterion) {
      case PointwiseCriterion::Bel: s = bel(m, w); break;
      case PointwiseCriterion::Pl: s = pl(m, w); break;
      case PointwiseCriterion::BetP: s = betp(m, i); break;
    }
    out.scores.push_back(s);
    if (out.choice == 0 || s > out.scores[out.choice - 1]) out.choice = i;
  }
  return out;
}

DistanceDecision decide_distance(const MassFunction& m, std::span<const OrderedElement> candidates,
                                 const DissimilarityMatrix& matrix) {
  if (candidates.empty()) throw Error(ErrorCode::EmptyCandidates, "no candidate elements");
  DistanceDecision out;
  out.distances.reserve(candidates.size());
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const auto x = candidates[k];
    if (!x.fits(m.frame_size()))
      throw Error(ErrorCode::InvalidElement, "candidate " + to_string(x) + " is not in the frame");
    const double d = belief_distance(m, categorical(m.frame(), x), matrix);
    out.distances.push_back(d);
    if (!best || d < out.distances[*best] ||
        (d == out.distances[*best] && index_of(x) < index_of(candidates[*best])))
      best = k;
  }
  out.choice = candidates[*best];
  return out;
}

namespace {

double directed_inclusion(const MassFunction& a, const MassFunction& b) {
  std::size_t na = 0;
  std::size_t nb = 0;
  std::size_t hits = 0;
  for (const auto& fa : a.focals()) {
    if (fa.element.is_empty()) continue;
    ++na;
    nb = 0;
    for (const auto& fb : b.focals()) {
      if (fb.element.is_empty()) continue;
      ++nb;
      if (subset(fa.element, fb.element)) ++hits;
    }
  }
  if (na == 0 || nb == 0) return 0.0;
  return static_cast<double>(hits) / static_cast<double>(na * nb);
}

}  // namespace

double inclusion_degree(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1, m2);
  return std::max(directed_inclusion(m1, m2), directed_inclusion(m2, m1));
}

double conflict(const MassFunction& m1, const MassFunction& m2, const DissimilarityMatrix& matrix,
                const InclusionDegree& inclusion) {
  require_same_frame(m1, m2);
  return (1.0 - inclusion(m1, m2)) * belief_distance(m1, m2, matrix);
}

double conflict_multi(std::span<const MassFunction> masses, const DissimilarityMatrix& matrix,
                      const InclusionDegree& inclusion) {
  if (masses.size() < 2)
    throw Error(ErrorCode::TooFewInputs, "conflict needs at least two mass functions");
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < masses.size(); ++i)
    for (std::size_t j = i + 1; j < masses.size(); ++j, ++pairs)
      sum += conflict(masses[i], masses[j], matrix, inclusion);
  return sum / static_cast<double>(pairs);
}

}  // namespace ordbelief

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

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ordbelief/mass.hpp"
#include "ordbelief/metric.hpp"

namespace ordbelief {

enum class PointwiseCriterion {
  Bel,
  Pl,
  BetP,
};

std::string_view to_string(PointwiseCriterion c) noexcept;

struct PointwiseDecision {
  Ordinal choice = 0;
  std::vector<double> scores;  // scores[i - 1] for state i
};

/// argmax over states of bel, pl or BetP of the singleton; ties go to the
/// smallest ordinal. Throws TotalConflict when m(∅) = 1.
PointwiseDecision decide_pointwise(const MassFunction& m, PointwiseCriterion criterion);

struct DistanceDecision {
  OrderedElement choice;
  std::vector<double> distances;  // one per candidate, input order
};

/// The candidate X whose categorical mass m_X is nearest to m under
/// belief_distance; ties go to the lowest canonical index.
/// Throws EmptyCandidates, EmptyElement or InvalidElement.
DistanceDecision decide_distance(const MassFunction& m, std::span<const OrderedElement> candidates,
                                 const DissimilarityMatrix& matrix);

/// Degree to which two bodies of evidence are nested in each other.
using InclusionDegree = std::function<double(const MassFunction&, const MassFunction&)>;

/// max(dinc(m1, m2), dinc(m2, m1)) where dinc(a, b) is the fraction of
/// non-empty focal pairs (X from a, Y from b) with X ⊆ Y. Zero if either side
/// has no non-empty focal element.
double inclusion_degree(const MassFunction& m1, const MassFunction& m2);

/// (1 − δ_inc(m1, m2)) · belief_distance(m1, m2).
double conflict(const MassFunction& m1, const MassFunction& m2, const DissimilarityMatrix& matrix,
                const InclusionDegree& inclusion = inclusion_degree);

/// Mean pairwise conflict over all unordered pairs, with one shared matrix.
/// Throws TooFewInputs.
double conflict_multi(std::span<const MassFunction> masses, const DissimilarityMatrix& matrix,
                      const InclusionDegree& inclusion = inclusion_degree);

}  // namespace ordbelief

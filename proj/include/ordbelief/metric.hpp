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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ordbelief/element_distance.hpp"
#include "ordbelief/frame.hpp"
#include "ordbelief/fuzzy.hpp"
#include "ordbelief/mass.hpp"

namespace ordbelief {

/// Which similarity weights populate a dissimilarity matrix.
struct MatrixKind {
  enum class Type {
    Plain,            // |A∩B| / |A ∪o B|
    OrderedModified,  // Jaccard plus an order bonus on disjoint pairs
    FuzzyModified,    // |A∩B|_o / |A ∪o B|
  };

  Type type = Type::Plain;
  ElementDistanceMode mode = ElementDistanceMode::Average;
  FuzzyParams fuzzy;  // FuzzyModified only; its mode is the one used

  static MatrixKind plain() { return {}; }
  static MatrixKind ordered(ElementDistanceMode mode = ElementDistanceMode::Average) {
    return {Type::OrderedModified, mode, {}};
  }
  static MatrixKind fuzzy_modified(const FuzzyParams& params) {
    return {Type::FuzzyModified, params.mode(), params};
  }

  friend bool operator==(const MatrixKind&, const MatrixKind&) = default;
};

std::string describe(const MatrixKind& kind);

/// Symmetric similarity matrix over the canonical enumeration of the ordered
/// power set, dimension 1 + n(n+1)/2, row-major.
class DissimilarityMatrix {
 public:
  DissimilarityMatrix(std::size_t frame_size, MatrixKind kind, std::vector<double> entries);

  std::size_t frame_size() const noexcept { return frame_size_; }
  std::size_t dim() const noexcept { return dim_; }
  const MatrixKind& kind() const noexcept { return kind_; }

  double at(std::size_t i, std::size_t j) const { return entries_.at(i * dim_ + j); }
  double at(OrderedElement a, OrderedElement b) const { return at(index_of(a), index_of(b)); }
  std::span<const double> row(std::size_t i) const {
    return std::span(entries_).subspan(i * dim_, dim_);
  }
  std::span<const double> data() const noexcept { return entries_; }

 private:
  std::size_t frame_size_;
  std::size_t dim_;
  MatrixKind kind_;
  std::vector<double> entries_;
};

/// Plain Jaccard similarity: 1 on (empty, empty), 0 when exactly one side is
/// empty, |A∩B| / |A ∪o B| otherwise.
DissimilarityMatrix jaccard_matrix(const OrderedFrame& frame);

/// Jaccard plus (1 - Int(A,B)) (1 - d_set(A,B)) / n, where Int(A,B) is 1 when
/// A and B meet. Disjoint pairs therefore score in [0, 1/n] by proximity.
DissimilarityMatrix ordered_matrix(const OrderedFrame& frame,
                                   ElementDistanceMode mode = ElementDistanceMode::Average);

/// |A∩B|_o / |A ∪o B| with the fuzzy intersection cardinality.
DissimilarityMatrix fuzzy_matrix(const OrderedFrame& frame, const FuzzyParams& params);

DissimilarityMatrix build_matrix(const OrderedFrame& frame, const MatrixKind& kind);

/// Process-wide immutable cache keyed by (frame size, kind).
std::shared_ptr<const DissimilarityMatrix> shared_matrix(const OrderedFrame& frame,
                                                         const MatrixKind& kind);

/// sqrt(½ (v1 − v2)ᵀ M (v1 − v2)) over the canonical mass vectors. Throws
/// FrameMismatch, or NegativeQuadraticForm if the form drops below -1e-9.
double belief_distance(const MassFunction& m1, const MassFunction& m2,
                       const DissimilarityMatrix& matrix);

}  // namespace ordbelief

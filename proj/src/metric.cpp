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

#include "ordbelief/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <utility>

#include "ordbelief/error.hpp"
#include "ordbelief/kernels.hpp"

namespace ordbelief {

std::string describe(const MatrixKind& kind) {
  switch (kind.type) {
    case MatrixKind::Type::Plain: return "plain";
    case MatrixKind::Type::OrderedModified:
      return "ordered(" + std::string(to_string(kind.mode)) + ")";
    case MatrixKind::Type::FuzzyModified: {
      char buf[96];
      std::snprintf(buf, sizeof buf, "fuzzy(alpha=%g,gamma=%g,%s)", kind.fuzzy.alpha(),
                    kind.fuzzy.gamma(), std::string(to_string(kind.fuzzy.mode())).c_str());
      return kind.fuzzy.conformant() ? std::string(buf) : std::string(buf) + "[nonconformant]";
    }
  }
  return "plain";
}

DissimilarityMatrix::DissimilarityMatrix(std::size_t frame_size, MatrixKind kind,
                                         std::vector<double> entries)
    : frame_size_(frame_size),
      dim_(ops_size(frame_size)),
      kind_(std::move(kind)),
      entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_)
    throw Error(ErrorCode::OutOfRange, "matrix entries do not match the ordered power set size");
}

namespace {

template <class Entry>
DissimilarityMatrix fill(const OrderedFrame& frame, MatrixKind kind, Entry entry) {
  const auto elems = enumerate_ops(frame);
  const std::size_t dim = elems.size();
  std::vector<double> m(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const auto a = elems[i];
      const auto b = elems[j];
      double v;
      if (a.is_empty() && b.is_empty())
        v = 1.0;
      else if (a.is_empty() || b.is_empty())
        v = 0.0;
      else
        v = entry(a, b);
      m[i * dim + j] = m[j * dim + i] = v;
    }
  }
  return DissimilarityMatrix(frame.size(), std::move(kind), std::move(m));
}

double jaccard(OrderedElement a, OrderedElement b) {
  return static_cast<double>(cardinality(intersect(a, b))) /
         static_cast<double>(cardinality(ordered_union(a, b)));
}

}  // namespace

DissimilarityMatrix jaccard_matrix(const OrderedFrame& frame) {
  return fill(frame, MatrixKind::plain(), jaccard);
}

DissimilarityMatrix ordered_matrix(const OrderedFrame& frame, ElementDistanceMode mode) {
  const std::size_t n = frame.size();
  return fill(frame, MatrixKind::ordered(mode), [&](OrderedElement a, OrderedElement b) {
    if (!intersect(a, b).is_empty()) return jaccard(a, b);
    return (1.0 - d_set(a, b, mode, n)) / static_cast<double>(n);
  });
}

DissimilarityMatrix fuzzy_matrix(const OrderedFrame& frame, const FuzzyParams& params) {
  const std::size_t n = frame.size();
  return fill(frame, MatrixKind::fuzzy_modified(params), [&](OrderedElement a, OrderedElement b) {
    const double v = fuzzy_intersection_cardinality(a, b, params, n) /
                     static_cast<double>(cardinality(ordered_union(a, b)));
    return std::min(v, 1.0);
  });
}

DissimilarityMatrix build_matrix(const OrderedFrame& frame, const MatrixKind& kind) {
  switch (kind.type) {
    case MatrixKind::Type::Plain: return jaccard_matrix(frame);
    case MatrixKind::Type::OrderedModified: return ordered_matrix(frame, kind.mode);
    case MatrixKind::Type::FuzzyModified: return fuzzy_matrix(frame, kind.fuzzy);
  }
  return jaccard_matrix(frame);
}

std::shared_ptr<const DissimilarityMatrix> shared_matrix(const OrderedFrame& frame,
                                                         const MatrixKind& kind) {
  static std::mutex mu;
  static std::vector<std::shared_ptr<const DissimilarityMatrix>> cache;
  std::lock_guard lock(mu);
  for (const auto& m : cache)
    if (m->frame_size() == frame.size() && m->kind() == kind) return m;
  cache.push_back(std::make_shared<const DissimilarityMatrix>(build_matrix(frame, kind)));
  return cache.back();
}

double belief_distance(const MassFunction& m1, const MassFunction& m2,
                       const DissimilarityMatrix& matrix) {
  require_same_frame(m1, m2);
  if (matrix.frame_size() != m1.frame_size())
    throw Error(ErrorCode::FrameMismatch, "matrix built for a different frame size");
  auto diff = m1.to_vector();
  const auto other = m2.to_vector();
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= other[i];
  const double q = kernels::quadratic_form(matrix.data(), diff);
  if (q < -kNormTolerance)
    throw Error(ErrorCode::NegativeQuadraticForm,
                "quadratic form is negative; the matrix is not positive semi-definite");
  const double d = std::sqrt(std::max(q, 0.0) / 2.0);
  return (d > 1.0 && d <= 1.0 + kNormTolerance) ? 1.0 : d;
}

}  // namespace ordbelief

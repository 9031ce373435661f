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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordbelief {

/// 1-based position of a state in the ordered frame.
using Ordinal = std::uint32_t;

/// Number of elements of the ordered power set of an n-state frame,
/// 1 + n(n+1)/2. Throws InvalidFrame for n == 0.
std::size_t ops_size(std::size_t n);

/// The frame of discernment: n exclusive, exhaustive states whose list order
/// is their ordinal order. Labels are display-only.
class OrderedFrame {
 public:
  explicit OrderedFrame(std::vector<std::string> labels);

  /// Frame labelled w1..wn.
  static OrderedFrame with_size(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Ordinal i) const;

  friend bool operator==(const OrderedFrame&, const OrderedFrame&) = default;

 private:
  std::vector<std::string> labels_;
};

/// An element of the ordered power set: either the empty set or the run of
/// consecutive states {w_lo, ..., w_hi}. Stored as its two endpoints.
class OrderedElement {
 public:
  /// The empty set.
  constexpr OrderedElement() noexcept = default;

  static constexpr OrderedElement empty() noexcept { return {}; }
  /// Throws InvalidElement unless 1 <= lo <= hi.
  static OrderedElement interval(Ordinal lo, Ordinal hi);
  static OrderedElement singleton(Ordinal i) { return interval(i, i); }
  /// The whole frame {w_1..w_n}.
  static OrderedElement whole(const OrderedFrame& frame) {
    return interval(1, static_cast<Ordinal>(frame.size()));
  }

  constexpr bool is_empty() const noexcept { return lo_ == 0; }
  constexpr bool is_singleton() const noexcept { return lo_ != 0 && lo_ == hi_; }
  /// Lower endpoint; 0 for the empty set.
  constexpr Ordinal lo() const noexcept { return lo_; }
  /// Upper endpoint; 0 for the empty set.
  constexpr Ordinal hi() const noexcept { return hi_; }

  /// True if every endpoint lies in 1..frame_size.
  constexpr bool fits(std::size_t frame_size) const noexcept {
    return is_empty() || hi_ <= frame_size;
  }

  friend constexpr bool operator==(OrderedElement, OrderedElement) = default;

 private:
  constexpr OrderedElement(Ordinal lo, Ordinal hi) noexcept : lo_(lo), hi_(hi) {}

  Ordinal lo_ = 0;
  Ordinal hi_ = 0;
};

std::size_t cardinality(OrderedElement a) noexcept;
bool contains(OrderedElement a, Ordinal i) noexcept;
/// a ⊆ b. The empty set is a subset of everything.
bool subset(OrderedElement a, OrderedElement b) noexcept;

/// a ∩ b; always an element of the ordered power set.
OrderedElement intersect(OrderedElement a, OrderedElement b) noexcept;

/// Smallest interval covering a and b. The empty set is neutral.
OrderedElement ordered_union(OrderedElement a, OrderedElement b) noexcept;

/// Left fold of ordered_union. Throws TooFewInputs on an empty list.
OrderedElement ordered_union_n(std::span<const OrderedElement> elems);

/// Position in the canonical enumeration: empty first, then by upper endpoint
/// ascending and lower endpoint descending. Independent of the frame size.
std::size_t index_of(OrderedElement a) noexcept;

/// Inverse of index_of for an n-state frame. Throws OutOfRange.
OrderedElement element_at(std::size_t index, std::size_t n);

/// Canonical enumeration of the ordered power set of `frame`.
std::vector<OrderedElement> enumerate_ops(const OrderedFrame& frame);

/// Total order matching index_of, for use as a map key.
struct CanonicalLess {
  bool operator()(OrderedElement a, OrderedElement b) const noexcept {
    return index_of(a) < index_of(b);
  }
};

/// "empty", "w2" or "w1..w3".
std::string to_string(OrderedElement a);

/// Parses the text rendering produced by to_string ("w2..w2" is accepted as
/// "w2"). Throws ParseError on malformed text and UnknownElement when an
/// endpoint exceeds frame_size.
OrderedElement parse_element(std::string_view text, std::size_t frame_size);

}  // namespace ordbelief

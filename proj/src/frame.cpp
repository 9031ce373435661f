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

#include "ordbelief/frame.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "ordbelief/error.hpp"

namespace ordbelief {

std::size_t ops_size(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidFrame, "frame must have at least one state");
  return 1 + n * (n + 1) / 2;
}

OrderedFrame::OrderedFrame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::InvalidFrame, "frame must have at least one state");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(ErrorCode::InvalidFrame, "frame labels must be non-empty");
    if (!seen.insert(l).second)
      throw Error(ErrorCode::InvalidFrame, "duplicate frame label '" + l + "'");
  }
}

OrderedFrame OrderedFrame::with_size(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
  return OrderedFrame(std::move(labels));
}

const std::string& OrderedFrame::label(Ordinal i) const {
  if (i < 1 || i > labels_.size())
    throw Error(ErrorCode::OutOfRange, "ordinal " + std::to_string(i) + " outside frame");
  return labels_[i - 1];
}

OrderedElement OrderedElement::interval(Ordinal lo, Ordinal hi) {
  if (lo < 1 || lo > hi)
    throw Error(ErrorCode::InvalidElement, "invalid interval endpoints " + std::to_string(lo) +
                                               ".." + std::to_string(hi));
  return OrderedElement(lo, hi);
}

std::size_t cardinality(OrderedElement a) noexcept {
  return a.is_empty() ? 0 : a.hi() - a.lo() + 1;
}

bool contains(OrderedElement a, Ordinal i) noexcept {
  return !a.is_empty() && a.lo() <= i && i <= a.hi();
}

bool subset(OrderedElement a, OrderedElement b) noexcept {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  return b.lo() <= a.lo() && a.hi() <= b.hi();
}

OrderedElement intersect(OrderedElement a, OrderedElement b) noexcept {
  if (a.is_empty() || b.is_empty()) return {};
  const Ordinal lo = std::max(a.lo(), b.lo());
  const Ordinal hi = std::min(a.hi(), b.hi());
  if (lo > hi) return {};
  return OrderedElement::interval(lo, hi);
}

OrderedElement ordered_union(OrderedElement a, OrderedElement b) noexcept {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  return OrderedElement::interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

OrderedElement ordered_union_n(std::span<const OrderedElement> elems) {
  if (elems.empty()) throw Error(ErrorCode::TooFewInputs, "ordered union of an empty list");
  OrderedElement acc = elems.front();
  for (auto e : elems.subspan(1)) acc = ordered_union(acc, e);
  return acc;
}

std::size_t index_of(OrderedElement a) noexcept {
  if (a.is_empty()) return 0;
  const std::size_t hi = a.hi();
  return 1 + hi * (hi - 1) / 2 + (hi - a.lo());
}

OrderedElement element_at(std::size_t index, std::size_t n) {
  if (index >= ops_size(n))
    throw Error(ErrorCode::OutOfRange, "element index " + std::to_string(index) +
                                           " outside ordered power set of size " +
                                           std::to_string(ops_size(n)));
  if (index == 0) return {};
  std::size_t hi = 1;
  while (1 + hi * (hi + 1) / 2 <= index) ++hi;
  const std::size_t offset = index - 1 - hi * (hi - 1) / 2;
  return OrderedElement::interval(static_cast<Ordinal>(hi - offset), static_cast<Ordinal>(hi));
}

std::vector<OrderedElement> enumerate_ops(const OrderedFrame& frame) {
  const auto n = static_cast<Ordinal>(frame.size());
  std::vector<OrderedElement> out;
  out.reserve(ops_size(n));
  out.emplace_back();
  for (Ordinal hi = 1; hi <= n; ++hi)
    for (Ordinal lo = hi; lo >= 1; --lo) out.push_back(OrderedElement::interval(lo, hi));
  return out;
}

std::string to_string(OrderedElement a) {
  if (a.is_empty()) return "empty";
  if (a.is_singleton()) return "w" + std::to_string(a.lo());
  return "w" + std::to_string(a.lo()) + "..w" + std::to_string(a.hi());
}

namespace {

// "w<digits>" to its ordinal; 0 on failure.
Ordinal parse_endpoint(std::string_view s) {
  if (s.size() < 2 || s.front() != 'w') return 0;
  s.remove_prefix(1);
  Ordinal value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return 0;
  return value;
}

}  // namespace

OrderedElement parse_element(std::string_view text, std::size_t frame_size) {
  if (text == "empty") return {};
  const auto bad = [&] {
    return Error(ErrorCode::ParseError, "malformed element '" + std::string(text) + "'");
  };
  Ordinal lo = 0;
  Ordinal hi = 0;
  if (const auto dots = text.find(".."); dots == std::string_view::npos) {
    lo = hi = parse_endpoint(text);
  } else {
    lo = parse_endpoint(text.substr(0, dots));
    hi = parse_endpoint(text.substr(dots + 2));
  }
  if (lo == 0 || hi == 0 || lo > hi) throw bad();
  if (hi > frame_size)
    throw Error(ErrorCode::UnknownElement, "element '" + std::string(text) +
                                               "' exceeds frame of " +
                                               std::to_string(frame_size) + " states");
  return OrderedElement::interval(lo, hi);
}

}  // namespace ordbelief

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

#include <random>
#include <vector>

#include "ordbelief/mass.hpp"

namespace ordbelief::testing {

/// Random mass function with 1..max_focal focal elements drawn uniformly from
/// the ordered power set. The empty set is eligible only if allow_empty.
inline MassFunction random_mass(const OrderedFrame& frame, std::mt19937_64& rng,
                                std::size_t max_focal = 4, bool allow_empty = false) {
  const std::size_t size = ops_size(frame.size());
  std::uniform_int_distribution<std::size_t> pick(allow_empty ? 0 : 1, size - 1);
  std::uniform_int_distribution<std::size_t> count(1, max_focal);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::vector<FocalMass> entries;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i)
    entries.push_back({element_at(pick(rng), frame.size()), weight(rng)});
  return MassFunction::renormalized(frame, entries);
}

inline std::size_t random_frame_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace ordbelief::testing

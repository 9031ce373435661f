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

#include <arm_neon.h>

#include "ordbelief/kernels.hpp"

namespace ordbelief::kernels::detail {

double quadratic_form_neon(const double* matrix, const double* v, std::size_t dim) noexcept {
  double acc = 0.0;
  const std::size_t body = dim & ~std::size_t{1};
  for (std::size_t i = 0; i < dim; ++i) {
    if (v[i] == 0.0) continue;
    const double* row = matrix + i * dim;
    float64x2_t dot = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j < body; j += 2) dot = vfmaq_f64(dot, vld1q_f64(row + j), vld1q_f64(v + j));
    double tail = 0.0;
    for (; j < dim; ++j) tail += row[j] * v[j];
    acc += v[i] * (vaddvq_f64(dot) + tail);
  }
  return acc;
}

}  // namespace ordbelief::kernels::detail

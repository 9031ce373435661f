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

// Built with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "ordbelief/kernels.hpp"

namespace ordbelief::kernels::detail {

namespace {

inline double hsum(__m256d x) noexcept {
  const __m128d lo = _mm256_castpd256_pd128(x);
  const __m128d hi = _mm256_extractf128_pd(x, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double quadratic_form_avx2(const double* matrix, const double* v, std::size_t dim) noexcept {
  double acc = 0.0;
  const std::size_t body = dim & ~std::size_t{3};
  for (std::size_t i = 0; i < dim; ++i) {
    if (v[i] == 0.0) continue;
    const double* row = matrix + i * dim;
    __m256d dot = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j < body; j += 4)
      dot = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(v + j), dot);
    double tail = 0.0;
    for (; j < dim; ++j) tail += row[j] * v[j];
    acc += v[i] * (hsum(dot) + tail);
  }
  return acc;
}

}  // namespace ordbelief::kernels::detail

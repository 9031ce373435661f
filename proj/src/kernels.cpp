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

#include "ordbelief/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ordbelief/error.hpp"

namespace ordbelief::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "scalar";
}

namespace detail {

double quadratic_form_scalar(const double* matrix, const double* v, std::size_t dim) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (v[i] == 0.0) continue;
    const double* row = matrix + i * dim;
    double dot = 0.0;
    for (std::size_t j = 0; j < dim; ++j) dot += row[j] * v[j];
    acc += v[i] * dot;
  }
  return acc;
}

}  // namespace detail

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) out.push_back(Isa::Avx2);
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
  out.push_back(Isa::Neon);
#endif
  return out;
}

namespace {

Isa select_isa() {
  const auto isas = available_isas();
  if (const char* forced = std::getenv("ORDBELIEF_ISA")) {
    for (auto isa : isas)
      if (to_string(isa) == forced) return isa;
  }
  return isas.back();
}

}  // namespace

Isa active_isa() {
  static const Isa isa = select_isa();
  return isa;
}

double quadratic_form(Isa isa, std::span<const double> matrix, std::span<const double> v) {
  const std::size_t dim = v.size();
  if (matrix.size() != dim * dim)
    throw Error(ErrorCode::OutOfRange, "matrix of " + std::to_string(matrix.size()) +
                                           " entries does not match vector of " +
                                           std::to_string(dim));
  const auto isas = available_isas();
  if (std::find(isas.begin(), isas.end(), isa) == isas.end())
    throw Error(ErrorCode::InvalidParams,
                "kernel variant " + std::string(to_string(isa)) + " is not available");
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2: return detail::quadratic_form_avx2(matrix.data(), v.data(), dim);
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
    case Isa::Neon: return detail::quadratic_form_neon(matrix.data(), v.data(), dim);
#endif
    default: return detail::quadratic_form_scalar(matrix.data(), v.data(), dim);
  }
}

double quadratic_form(std::span<const double> matrix, std::span<const double> v) {
  return quadratic_form(active_isa(), matrix, v);
}

}  // namespace ordbelief::kernels

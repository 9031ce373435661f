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

#include <span>
#include <string_view>
#include <vector>

// Dense arithmetic kernels with a scalar reference implementation and
// vectorized variants picked at runtime from the host CPU.

namespace ordbelief::kernels {

enum class Isa {
  Scalar,
  Avx2,
  Neon,
};

std::string_view to_string(Isa isa) noexcept;

/// Variants compiled in and supported by the running CPU, Scalar first.
std::vector<Isa> available_isas();

/// Variant used by the dispatching entry points: the widest available one,
/// unless ORDBELIEF_ISA=scalar|avx2|neon names another available variant.
Isa active_isa();

/// vᵀ M v for a row-major dim × dim matrix, dim = v.size().
double quadratic_form(std::span<const double> matrix, std::span<const double> v);
double quadratic_form(Isa isa, std::span<const double> matrix, std::span<const double> v);

namespace detail {
double quadratic_form_scalar(const double* matrix, const double* v, std::size_t dim) noexcept;
#if defined(__x86_64__) || defined(_M_X64)
double quadratic_form_avx2(const double* matrix, const double* v, std::size_t dim) noexcept;
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
double quadratic_form_neon(const double* matrix, const double* v, std::size_t dim) noexcept;
#endif
}  // namespace detail

}  // namespace ordbelief::kernels

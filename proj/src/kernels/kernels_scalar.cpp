// Copyright 2026 The toricsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reference kernels. Plain loops, no intrinsics; the SIMD variants are
// checked against these.

#include <bit>

#include "toricsim/kernels.hpp"

namespace toricsim::kernels {

namespace {

// i^k for k in 0..3.
inline c64 i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void apply_gate1_scalar(c64* amps, std::size_t size, int qubit,
                        const c64* u) {
  const std::size_t stride = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < size; base += 2 * stride) {
    for (std::size_t k = 0; k < stride; ++k) {
      const std::size_t i0 = base + k;
      const std::size_t i1 = i0 + stride;
      const c64 a0 = amps[i0];
      const c64 a1 = amps[i1];
      amps[i0] = u[0] * a0 + u[1] * a1;
      amps[i1] = u[2] * a0 + u[3] * a1;
    }
  }
}

void apply_pauli_scalar(c64* amps, std::size_t size, std::uint64_t x_mask,
                        std::uint64_t z_mask, int phase_exp) {
  const c64 global = i_power(phase_exp);
  if (x_mask == 0) {
    for (std::size_t b = 0; b < size; ++b) {
      const bool neg = std::popcount(z_mask & b) & 1;
      amps[b] *= neg ? -global : global;
    }
    return;
  }
  // Pair (b, b^x) with the high bit of x clear in b; each pair is hit once.
  const std::uint64_t high = std::uint64_t{1}
                             << (63 - std::countl_zero(x_mask));
  for (std::size_t b = 0; b < size; ++b) {
    if (b & high) continue;
    const std::size_t j = b ^ x_mask;
    const bool neg_b = std::popcount(z_mask & b) & 1;
    const bool neg_j = std::popcount(z_mask & j) & 1;
    const c64 ab = amps[b];
    const c64 aj = amps[j];
    amps[j] = (neg_b ? -global : global) * ab;
    amps[b] = (neg_j ? -global : global) * aj;
  }
}

c64 inner_product_scalar(const c64* a, const c64* b, std::size_t size) {
  c64 acc{0.0, 0.0};
  for (std::size_t i = 0; i < size; ++i) {
    acc += std::conj(a[i]) * b[i];
  }
  return acc;
}

void axpy_scalar(c64* dst, const c64* src, c64 factor, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    dst[i] += factor * src[i];
  }
}

void scale_scalar(c64* dst, c64 factor, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    dst[i] *= factor;
  }
}

}  // namespace

const KernelOps& scalar_ops() {
  static const KernelOps ops{
      "scalar",       apply_gate1_scalar, apply_pauli_scalar,
      inner_product_scalar, axpy_scalar,  scale_scalar,
  };
  return ops;
}

}  // namespace toricsim::kernels

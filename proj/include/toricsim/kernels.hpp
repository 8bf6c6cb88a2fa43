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

#ifndef TORICSIM_KERNELS_HPP
#define TORICSIM_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace toricsim::kernels {

using c64 = std::complex<double>;

/// One set of amplitude kernels. The scalar set is the reference
/// implementation; SIMD sets must match it within normal floating-point
/// reassociation tolerance and are equivalence-tested against it.
struct KernelOps {
  const char* name;

  /// In-place single-qubit gate u (row-major [u00,u01,u10,u11]) on a
  /// 2^n-element amplitude array.
  void (*apply_gate1)(c64* amps, std::size_t size, int qubit,
                      const c64* u);

  /// In-place Pauli i^phase * X^x Z^z:
  /// amp'[b ^ x] = i^phase * (-1)^popcount(z & b) * amp[b].
  void (*apply_pauli)(c64* amps, std::size_t size, std::uint64_t x_mask,
                      std::uint64_t z_mask, int phase_exp);

  /// sum_i conj(a[i]) * b[i].
  c64 (*inner_product)(const c64* a, const c64* b, std::size_t size);

  /// dst[i] += factor * src[i].
  void (*axpy)(c64* dst, const c64* src, c64 factor, std::size_t size);

  /// dst[i] *= factor.
  void (*scale)(c64* dst, c64 factor, std::size_t size);
};

const KernelOps& scalar_ops();
#if defined(TORICSIM_HAVE_AVX2)
const KernelOps& avx2_ops();
#endif

bool cpu_supports_avx2();

/// The runtime-selected kernel set: AVX2 when the CPU supports it,
/// scalar otherwise. The TORICSIM_KERNELS environment variable
/// ("scalar" or "avx2") overrides the choice at startup.
const KernelOps& active_ops();

/// Forces a kernel set by name ("scalar"/"avx2"); used by equivalence
/// tests. Throws if the set is unavailable on this machine.
void select_ops(const char* name);

}  // namespace toricsim::kernels

#endif  // TORICSIM_KERNELS_HPP

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

// AVX2 kernels: one __m256d holds two complex<double> amplitudes in
// (re,im,re,im) layout. Equivalence-tested against the scalar set.

#include "toricsim/kernels.hpp"

#if defined(TORICSIM_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace toricsim::kernels {

namespace {

inline c64 i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline __m256d loadu(const c64* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void storeu(c64* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// Swap re<->im inside each complex lane.
inline __m256d swap_ri(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// Swap the two complex lanes.
inline __m256d swap_lanes(__m256d v) {
  return _mm256_permute2f128_pd(v, v, 0x01);
}

// Elementwise complex product of two lanes of complexes.
inline __m256d cmul(__m256d a, __m256d b) {
  __m256d b_re = _mm256_movedup_pd(b);          // [br0,br0,br1,br1]
  __m256d b_im = _mm256_permute_pd(b, 0b1111);  // [bi0,bi0,bi1,bi1]
  __m256d t0 = _mm256_mul_pd(a, b_re);
  __m256d t1 = _mm256_mul_pd(swap_ri(a), b_im);
  return _mm256_addsub_pd(t0, t1);  // (ar*br - ai*bi, ai*br + ar*bi)
}

inline __m256d broadcast(c64 s) {
  return _mm256_setr_pd(s.real(), s.imag(), s.real(), s.imag());
}

inline __m256d sign_mask(bool re0, bool im0, bool re1, bool im1) {
  const double neg = -0.0;
  return _mm256_setr_pd(re0 ? neg : 0.0, im0 ? neg : 0.0, re1 ? neg : 0.0,
                        im1 ? neg : 0.0);
}

// Multiplies both lanes by i^CASE.
template <int CASE>
inline __m256d mul_i_power(__m256d v) {
  if constexpr (CASE == 0) {
    return v;
  } else if constexpr (CASE == 1) {
    // i*(r,m) = (-m, r)
    return _mm256_xor_pd(swap_ri(v), sign_mask(true, false, true, false));
  } else if constexpr (CASE == 2) {
    return _mm256_xor_pd(v, sign_mask(true, true, true, true));
  } else {
    // -i*(r,m) = (m, -r)
    return _mm256_xor_pd(swap_ri(v), sign_mask(false, true, false, true));
  }
}

// Per-lane sign flip driven by two parity bits.
inline __m256d apply_parity(__m256d v, bool p0, bool p1) {
  return _mm256_xor_pd(v, sign_mask(p0, p0, p1, p1));
}

void apply_gate1_avx2(c64* amps, std::size_t size, int qubit, const c64* u) {
  if (qubit == 0) {
    // Adjacent pairs: one vector holds both members.
    const __m256d col0 = _mm256_setr_pd(u[0].real(), u[0].imag(),
                                        u[2].real(), u[2].imag());
    const __m256d col1 = _mm256_setr_pd(u[1].real(), u[1].imag(),
                                        u[3].real(), u[3].imag());
    for (std::size_t i = 0; i < size; i += 2) {
      __m256d v = loadu(amps + i);
      __m256d dup0 = _mm256_permute2f128_pd(v, v, 0x00);  // [a0,a0]
      __m256d dup1 = _mm256_permute2f128_pd(v, v, 0x11);  // [a1,a1]
      storeu(amps + i,
             _mm256_add_pd(cmul(dup0, col0), cmul(dup1, col1)));
    }
    return;
  }
  const std::size_t stride = std::size_t{1} << qubit;
  const __m256d u00 = broadcast(u[0]), u01 = broadcast(u[1]);
  const __m256d u10 = broadcast(u[2]), u11 = broadcast(u[3]);
  for (std::size_t base = 0; base < size; base += 2 * stride) {
    for (std::size_t k = 0; k < stride; k += 2) {
      c64* p0 = amps + base + k;
      c64* p1 = p0 + stride;
      __m256d a0 = loadu(p0);
      __m256d a1 = loadu(p1);
      storeu(p0, _mm256_add_pd(cmul(a0, u00), cmul(a1, u01)));
      storeu(p1, _mm256_add_pd(cmul(a0, u10), cmul(a1, u11)));
    }
  }
}

template <int CASE>
void apply_pauli_diag(c64* amps, std::size_t size, std::uint64_t z_mask) {
  for (std::size_t b = 0; b < size; b += 2) {
    bool p0 = std::popcount(z_mask & b) & 1;
    bool p1 = p0 ^ static_cast<bool>(z_mask & 1);
    __m256d v = mul_i_power<CASE>(loadu(amps + b));
    storeu(amps + b, apply_parity(v, p0, p1));
  }
}

template <int CASE>
void apply_pauli_offdiag(c64* amps, std::size_t size, std::uint64_t x_mask,
                         std::uint64_t z_mask) {
  const bool z0 = z_mask & 1;                       // parity step b -> b+1
  const bool zx = std::popcount(z_mask & x_mask) & 1;  // parity step b -> b^x
  if (x_mask == 1) {
    // Partners are adjacent; each vector is a self-contained swap.
    for (std::size_t b = 0; b < size; b += 2) {
      bool pb = std::popcount(z_mask & b) & 1;
      __m256d t = swap_lanes(loadu(amps + b));  // [amp[b+1], amp[b]]
      storeu(amps + b,
             apply_parity(mul_i_power<CASE>(t), pb ^ z0, pb));
    }
    return;
  }
  const std::uint64_t high = std::uint64_t{1}
                             << (63 - std::countl_zero(x_mask));
  const bool swap_j = x_mask & 1;  // partner pair is loaded in reverse
  for (std::size_t base = 0; base < size; base += 2 * high) {
    for (std::size_t b = base; b < base + high; b += 2) {
      const std::size_t j = b ^ x_mask;
      const std::size_t jbase = j & ~std::size_t{1};
      bool pb = std::popcount(z_mask & b) & 1;
      bool pj = pb ^ zx;
      __m256d vb = loadu(amps + b);
      __m256d vj = loadu(amps + jbase);
      if (swap_j) vj = swap_lanes(vj);
      // amp'[j(t)] = f(t) amp[t] with f = i^CASE * (-1)^parity.
      __m256d out_j = apply_parity(mul_i_power<CASE>(vb), pb, pb ^ z0);
      __m256d out_b = apply_parity(mul_i_power<CASE>(vj), pj, pj ^ z0);
      if (swap_j) out_j = swap_lanes(out_j);
      storeu(amps + jbase, out_j);
      storeu(amps + b, out_b);
    }
  }
}

void apply_pauli_avx2(c64* amps, std::size_t size, std::uint64_t x_mask,
                      std::uint64_t z_mask, int phase_exp) {
  if (size < 2) {
    scalar_ops().apply_pauli(amps, size, x_mask, z_mask, phase_exp);
    return;
  }
  const int c = phase_exp & 3;
  if (x_mask == 0) {
    switch (c) {
      case 0: apply_pauli_diag<0>(amps, size, z_mask); break;
      case 1: apply_pauli_diag<1>(amps, size, z_mask); break;
      case 2: apply_pauli_diag<2>(amps, size, z_mask); break;
      default: apply_pauli_diag<3>(amps, size, z_mask); break;
    }
    return;
  }
  switch (c) {
    case 0: apply_pauli_offdiag<0>(amps, size, x_mask, z_mask); break;
    case 1: apply_pauli_offdiag<1>(amps, size, x_mask, z_mask); break;
    case 2: apply_pauli_offdiag<2>(amps, size, x_mask, z_mask); break;
    default: apply_pauli_offdiag<3>(amps, size, x_mask, z_mask); break;
  }
}

c64 inner_product_avx2(const c64* a, const c64* b, std::size_t size) {
  if (size < 2) return scalar_ops().inner_product(a, b, size);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  for (std::size_t i = 0; i < size; i += 2) {
    __m256d va = loadu(a + i);
    __m256d vb = loadu(b + i);
    acc_re = _mm256_add_pd(acc_re, _mm256_mul_pd(va, vb));
    acc_im = _mm256_add_pd(acc_im, _mm256_mul_pd(va, swap_ri(vb)));
  }
  // re = sum(ar*br + ai*bi); im = sum(ar*bi - ai*br).
  acc_im = _mm256_xor_pd(acc_im, sign_mask(false, true, false, true));
  alignas(32) double re4[4], im4[4];
  _mm256_store_pd(re4, acc_re);
  _mm256_store_pd(im4, acc_im);
  return {re4[0] + re4[1] + re4[2] + re4[3],
          im4[0] + im4[1] + im4[2] + im4[3]};
}

void axpy_avx2(c64* dst, const c64* src, c64 factor, std::size_t size) {
  if (size < 2) {
    scalar_ops().axpy(dst, src, factor, size);
    return;
  }
  const __m256d f = broadcast(factor);
  for (std::size_t i = 0; i < size; i += 2) {
    storeu(dst + i, _mm256_add_pd(loadu(dst + i), cmul(loadu(src + i), f)));
  }
}

void scale_avx2(c64* dst, c64 factor, std::size_t size) {
  if (size < 2) {
    scalar_ops().scale(dst, factor, size);
    return;
  }
  const __m256d f = broadcast(factor);
  for (std::size_t i = 0; i < size; i += 2) {
    storeu(dst + i, cmul(loadu(dst + i), f));
  }
}

}  // namespace

const KernelOps& avx2_ops() {
  static const KernelOps ops{
      "avx2",         apply_gate1_avx2, apply_pauli_avx2,
      inner_product_avx2, axpy_avx2,    scale_avx2,
  };
  return ops;
}

}  // namespace toricsim::kernels

#endif  // TORICSIM_HAVE_AVX2

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

// Equivalence tests between the scalar reference kernels and the SIMD
// variants, plus dense-matrix oracle checks for both.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "toricsim/kernels.hpp"
#include "toricsim/pauli.hpp"

using namespace toricsim;
namespace k = toricsim::kernels;

namespace {

std::vector<c64> random_amps(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<c64> amps(std::size_t{1} << n);
  for (auto& a : amps) a = c64{gauss(rng), gauss(rng)};
  return amps;
}

Mat2 random_unitary(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double t = angle(rng) / 2.0, a = angle(rng), b = angle(rng),
               g = angle(rng);
  const c64 i{0, 1};
  return {std::exp(i * (g + a)) * std::cos(t),
          std::exp(i * (g + b)) * std::sin(t),
          -std::exp(i * (g - b)) * std::sin(t),
          std::exp(i * (g - a)) * std::cos(t)};
}

double max_abs_diff(const std::vector<c64>& a, const std::vector<c64>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

bool have_avx2() {
#if defined(TORICSIM_HAVE_AVX2)
  return k::cpu_supports_avx2();
#else
  return false;
#endif
}

}  // namespace

TEST_CASE("scalar apply_gate1 matches the dense matrix oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    int q = static_cast<int>(rng() % n);
    Mat2 u = random_unitary(rng);
    auto amps = random_amps(n, rng);

    oracle::Vec v(1 << n);
    for (int i = 0; i < (1 << n); ++i) v(i) = amps[i];
    oracle::Vec expected = oracle::gate_matrix_on(n, u, q) * v;

    k::scalar_ops().apply_gate1(amps.data(), amps.size(), q, u.data());
    for (int i = 0; i < (1 << n); ++i) {
      CHECK(std::abs(amps[i] - expected(i)) < 1e-12);
    }
  }
}

TEST_CASE("scalar apply_pauli matches the dense matrix oracle") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    auto p = oracle::random_pauli(n, rng);
    auto amps = random_amps(n, rng);

    oracle::Vec v(1 << n);
    for (int i = 0; i < (1 << n); ++i) v(i) = amps[i];
    oracle::Vec expected = oracle::pauli_matrix(p) * v;

    k::scalar_ops().apply_pauli(amps.data(), amps.size(), p.x_mask(),
                                p.z_mask(), p.xz_phase_exp());
    for (int i = 0; i < (1 << n); ++i) {
      CHECK(std::abs(amps[i] - expected(i)) < 1e-12);
    }
  }
}

TEST_CASE("avx2 kernels match the scalar reference") {
  if (!have_avx2()) {
    MESSAGE("AVX2 unavailable; skipping equivalence checks");
    return;
  }
#if defined(TORICSIM_HAVE_AVX2)
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    auto ref = random_amps(n, rng);
    auto simd = ref;

    switch (trial % 4) {
      case 0: {
        int q = static_cast<int>(rng() % n);
        Mat2 u = random_unitary(rng);
        k::scalar_ops().apply_gate1(ref.data(), ref.size(), q, u.data());
        k::avx2_ops().apply_gate1(simd.data(), simd.size(), q, u.data());
        break;
      }
      case 1: {
        auto p = oracle::random_pauli(n, rng);
        k::scalar_ops().apply_pauli(ref.data(), ref.size(), p.x_mask(),
                                    p.z_mask(), p.xz_phase_exp());
        k::avx2_ops().apply_pauli(simd.data(), simd.size(), p.x_mask(),
                                  p.z_mask(), p.xz_phase_exp());
        break;
      }
      case 2: {
        auto other = random_amps(n, rng);
        c64 a = k::scalar_ops().inner_product(ref.data(), other.data(),
                                              ref.size());
        c64 b = k::avx2_ops().inner_product(simd.data(), other.data(),
                                            simd.size());
        CHECK(std::abs(a - b) <
              1e-13 * std::max(1.0, std::abs(a)) * std::sqrt(ref.size()));
        continue;
      }
      default: {
        auto src = random_amps(n, rng);
        c64 f{0.3, -1.2};
        k::scalar_ops().axpy(ref.data(), src.data(), f, ref.size());
        k::avx2_ops().axpy(simd.data(), src.data(), f, simd.size());
        k::scalar_ops().scale(ref.data(), f, ref.size());
        k::avx2_ops().scale(simd.data(), f, simd.size());
        break;
      }
    }
    CHECK(max_abs_diff(ref, simd) < 1e-13);
  }
#endif
}

TEST_CASE("avx2 pauli application hits every mask layout") {
  if (!have_avx2()) return;
#if defined(TORICSIM_HAVE_AVX2)
  std::mt19937_64 rng(34);
  for (int n : {1, 2, 3, 6}) {
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t x = 0; x <= all; ++x) {
      for (int rep = 0; rep < 4; ++rep) {
        std::uint64_t z = rng() & all;
        int phase = static_cast<int>(rng() % 4);
        auto ref = random_amps(n, rng);
        auto simd = ref;
        k::scalar_ops().apply_pauli(ref.data(), ref.size(), x, z, phase);
        k::avx2_ops().apply_pauli(simd.data(), simd.size(), x, z, phase);
        CHECK(max_abs_diff(ref, simd) < 1e-13);
      }
    }
  }
#endif
}

TEST_CASE("kernel selection honors explicit choices") {
  k::select_ops("scalar");
  CHECK(std::string(k::active_ops().name) == "scalar");
  if (have_avx2()) {
    k::select_ops("avx2");
    CHECK(std::string(k::active_ops().name) == "avx2");
  }
  CHECK_THROWS(k::select_ops("no-such-kernel"));
  // Restore the default for other tests in this binary.
  k::select_ops(have_avx2() ? "avx2" : "scalar");
}

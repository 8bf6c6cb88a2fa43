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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "toricsim/lattice.hpp"
#include "toricsim/statevector.hpp"

using namespace toricsim;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

TEST_CASE("minimal vacuum is the GHZ state, exactly") {
  auto psi = StateVector::vacuum_dense(ToricLattice::minimal());
  for (std::size_t i = 0; i < 16; ++i) {
    const double want = (i == 0 || i == 15) ? kInvSqrt2 : 0.0;
    CHECK(std::abs(psi.amplitudes()[i] - c64{want, 0}) < 1e-14);
  }
}

TEST_CASE("vacuum is the +1 eigenstate of every plaquette operator") {
  for (auto [w, h] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3},
                      std::pair{4, 4}}) {
    auto lat = ToricLattice::grid(w, h);
    auto psi = StateVector::vacuum_dense(lat);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
    for (int id = 0; id < lat.plaquette_count(); ++id) {
      CHECK(psi.expectation(lat.plaquette_operator(id)) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("vacuum energy is minus the term count, and Z excites by 2") {
  auto lat = ToricLattice::minimal();
  auto psi = StateVector::vacuum_dense(lat);
  CHECK(psi.energy(lat) == doctest::Approx(-5.0).epsilon(1e-12));

  auto excited = psi;
  excited.apply_pauli(PauliString::single(4, 'Z', 0));
  CHECK(excited.energy(lat) == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("energy respects the spectral bound on random states") {
  std::mt19937_64 rng(41);
  auto lat = ToricLattice::grid(3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    auto psi = oracle::random_state(9, rng);
    CHECK(psi.energy(lat) >= -static_cast<double>(lat.plaquette_count()) -
                                 1e-9);
  }
}

TEST_CASE("the braiding relation of the loop and the string") {
  // X0 X1 X2 X3 (Z0 |vac>) = - Z0 |vac>.
  auto lat = ToricLattice::minimal();
  auto ini = StateVector::vacuum_dense(lat);
  ini.apply_pauli(PauliString::single(4, 'Z', 0));
  auto fin = ini;
  fin.apply_pauli(PauliString::parse("X0 X1 X2 X3", 4));
  CHECK(std::abs(ini.inner_product(fin) - c64{-1.0, 0}) < 1e-12);
  // The loop on the vacuum itself does nothing.
  auto vac = StateVector::vacuum_dense(lat);
  auto looped = vac;
  looped.apply_pauli(PauliString::parse("X0 X1 X2 X3", 4));
  CHECK(std::abs(vac.inner_product(looped) - c64{1.0, 0}) < 1e-12);
}

TEST_CASE("gates and Paulis preserve the norm over many applications") {
  std::mt19937_64 rng(42);
  auto psi = oracle::random_state(6, rng);
  const Gate1 gates[] = {Gate1::H, Gate1::S, Gate1::Sdg,
                         Gate1::X, Gate1::Y, Gate1::Z};
  for (int step = 0; step < 10000; ++step) {
    if (step % 3 == 0) {
      psi.apply_pauli(oracle::random_pauli(6, rng));
    } else {
      psi.apply_clifford1(gates[rng() % 6], static_cast<int>(rng() % 6));
    }
  }
  CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
}

TEST_CASE("S then Sdg is the identity; Pauli twice is the identity") {
  std::mt19937_64 rng(43);
  auto psi = oracle::random_state(4, rng);
  auto copy = psi;
  copy.apply_clifford1(Gate1::S, 2);
  copy.apply_clifford1(Gate1::Sdg, 2);
  CHECK(psi.distance_to(copy) < 1e-12);
  auto z = PauliString::single(4, 'Z', 1);
  copy.apply_pauli(z);
  copy.apply_pauli(z);
  CHECK(psi.distance_to(copy) < 1e-12);
}

TEST_CASE("non-unitary matrices are rejected") {
  StateVector psi(2);
  Mat2 bad{c64{2, 0}, c64{0, 0}, c64{0, 0}, c64{0.5, 0}};  // det 1, not unitary
  CHECK_THROWS_AS(psi.apply_gate(bad, 0), std::invalid_argument);
  CHECK_THROWS_AS(psi.apply_gate(gate1_matrix(Gate1::H), 7),
                  std::invalid_argument);
}

TEST_CASE("apply_gate matches the dense oracle including global phase") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    auto psi = oracle::random_state(n, rng);
    auto p = oracle::random_pauli(n, rng);
    oracle::Vec expected = oracle::pauli_matrix(p) * oracle::to_eigen(psi);
    psi.apply_pauli(p);
    oracle::Vec got = oracle::to_eigen(psi);
    CHECK((expected - got).norm() < 1e-12);
  }
}

TEST_CASE("correlation curve of GHZ states is cos(4 gamma + phi)") {
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  std::vector<double> gammas;
  for (int k = 0; k < 12; ++k) gammas.push_back(k * kPi / 12.0);
  for (int trial = 0; trial < 8; ++trial) {
    const double phi = trial == 0 ? 0.0 : phase(rng);
    auto psi = ghz_state(phi);
    auto curve = psi.correlation_curve(gammas);
    for (std::size_t k = 0; k < gammas.size(); ++k) {
      CHECK(curve[k] ==
            doctest::Approx(std::cos(4 * gammas[k] + phi)).epsilon(1e-10));
    }
  }
  // Spot values from the protocol.
  CHECK(ghz_state(0.0).correlation_curve(std::vector{0.0})[0] ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ghz_state(kPi).correlation_curve(std::vector{0.0})[0] ==
        doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(ghz_state(0.0).correlation_curve(std::vector{kPi / 8})[0] ==
        doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("correlation curve has only even harmonics up to order 4") {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 5; ++trial) {
    auto psi = oracle::random_state(4, rng);
    const int m = 32;
    std::vector<double> gammas(m);
    for (int k = 0; k < m; ++k) gammas[k] = 2.0 * kPi * k / m;
    auto curve = psi.correlation_curve(gammas);
    for (int h = 0; h <= m / 2; ++h) {
      c64 coeff{0, 0};
      for (int k = 0; k < m; ++k) {
        coeff += curve[k] * std::exp(c64{0, -2.0 * kPi * h * k / m});
      }
      const bool allowed = (h % 2 == 0) && h <= 4;
      if (!allowed) CHECK(std::abs(coeff) < 1e-9);
    }
  }
}

TEST_CASE("z populations of the vacuum and mixtures") {
  auto psi = StateVector::vacuum_dense(ToricLattice::minimal());
  auto pops = psi.z_populations();
  CHECK(pops[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pops[15] == doctest::Approx(0.5).epsilon(1e-12));
  double sum = 0.0;
  for (double p : pops) sum += p;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

  auto uniform = DensityMatrix4::uniform_mixture().z_populations();
  for (double p : uniform) CHECK(p == doctest::Approx(1.0 / 16));
}

TEST_CASE("ground-state construction is idempotent") {
  auto lat = ToricLattice::grid(3, 3);
  auto psi = StateVector::vacuum_dense(lat);
  for (int id = 0; id < lat.plaquette_count(); ++id) {
    if (lat.plaquette(id).kind != PlaquetteKind::S) continue;
    if (lat.plaquette(id).truncated) continue;
    // (1 + C_s)/sqrt(2) applied again only rescales by sqrt(2).
    auto again = psi;
    auto flipped = psi;
    flipped.apply_pauli(lat.plaquette_operator(id));
    // again = (psi + flipped)/sqrt(2)
    std::vector<c64> amps(again.amplitudes().begin(),
                          again.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
      amps[i] = (amps[i] + flipped.amplitudes()[i]) / std::numbers::sqrt2;
    }
    double norm2 = 0.0;
    for (auto& a : amps) norm2 += std::norm(a);
    for (auto& a : amps) a /= std::sqrt(norm2);
    StateVector renorm(lat.qubit_count());
    renorm.set_amplitudes(std::move(amps));
    CHECK(psi.distance_to(renorm) < 1e-12);
  }
}

TEST_CASE("interference sequence lands on -i GHZ(pi), global phase included") {
  for (int q = 0; q < 4; ++q) {
    auto psi = StateVector::vacuum_dense(ToricLattice::minimal());
    psi.apply_clifford1(Gate1::Sdg, q);
    psi.apply_pauli(PauliString::parse("X0 X1 X2 X3", 4));
    psi.apply_clifford1(Gate1::S, q);
    auto target = ghz_state(kPi);
    // The overlap with GHZ(pi) is exactly -i.
    CHECK(std::abs(target.inner_product(psi) - c64{0, -1}) < 1e-12);
    std::vector<c64> amps(target.amplitudes().begin(),
                          target.amplitudes().end());
    for (auto& a : amps) a *= c64{0, -1};
    StateVector want(4);
    want.set_amplitudes(std::move(amps));
    CHECK(psi.distance_to(want) < 1e-12);
  }
}

TEST_CASE("density matrix matches the pure state it came from") {
  std::mt19937_64 rng(47);
  auto psi = oracle::random_state(4, rng);
  auto rho = DensityMatrix4::from_pure(psi);
  CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rho.min_eigenvalue() > -1e-10);
  CHECK(rho.fidelity(psi) == doctest::Approx(1.0).epsilon(1e-12));

  auto pops_psi = psi.z_populations();
  auto pops_rho = rho.z_populations();
  for (int k = 0; k < 16; ++k) {
    CHECK(pops_psi[k] == doctest::Approx(pops_rho[k]).epsilon(1e-12));
  }
  std::vector<double> gammas{0.1, 0.4, 1.1, 2.0};
  auto c_psi = psi.correlation_curve(gammas);
  auto c_rho = rho.correlation_curve(gammas);
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    CHECK(c_psi[k] == doctest::Approx(c_rho[k]).epsilon(1e-10));
  }
}

TEST_CASE("size limits are enforced") {
  CHECK_THROWS_AS(StateVector(21), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(0), std::invalid_argument);
  StateVector a(3), b(4);
  CHECK_THROWS_AS(a.inner_product(b), std::invalid_argument);
  CHECK_THROWS_AS(a.z_populations(), std::invalid_argument);
  CHECK_THROWS_AS(a.correlation_curve(std::vector{0.0}),
                  std::invalid_argument);
}

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

#include <bit>
#include <random>

#include "oracle.hpp"
#include "toricsim/pauli.hpp"

using namespace toricsim;

TEST_CASE("single-qubit products carry the right phase") {
  auto x = PauliString::single(1, 'X', 0);
  auto y = PauliString::single(1, 'Y', 0);
  auto z = PauliString::single(1, 'Z', 0);

  auto xz = x * z;
  CHECK(xz.site(0) == 'Y');
  CHECK(xz.phase_exp() == 3);  // X Z = -i Y
  CHECK(xz.render() == "-i Y0");

  auto zx = z * x;
  CHECK(zx.site(0) == 'Y');
  CHECK(zx.phase_exp() == 1);  // Z X = i Y

  auto zxz = z * x * z;  // = -X
  CHECK(zxz.site(0) == 'X');
  CHECK(zxz.phase_exp() == 2);

  CHECK((y * y).is_identity());
  CHECK((y * y).phase_exp() == 0);
}

TEST_CASE("identity is neutral and inverses cancel") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 64);
    auto p = oracle::random_pauli(n, rng);
    auto id = PauliString::identity(n);
    CHECK(id * p == p);
    CHECK(p * id == p);
    CHECK((p * p.adjoint()) == id);
    auto h = oracle::random_hermitian_pauli(n, rng);
    CHECK((h.phase_exp() & 1) == 0);
    CHECK(h * h == id);  // Hermitian Paulis square to the identity
  }
}

TEST_CASE("group laws hold on random strings up to 64 qubits") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 64);
    auto a = oracle::random_pauli(n, rng);
    auto b = oracle::random_pauli(n, rng);
    auto c = oracle::random_pauli(n, rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("commutes agrees with the symplectic form") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 64);
    auto a = oracle::random_pauli(n, rng);
    auto b = oracle::random_pauli(n, rng);
    int form = (std::popcount(a.x_mask() & b.z_mask()) +
                std::popcount(a.z_mask() & b.x_mask())) & 1;
    CHECK(commutes(a, b) == (form ? -1 : +1));
    // ab == +/- ba exactly.
    auto ab = a * b;
    auto ba = b * a;
    if (commutes(a, b) > 0) {
      CHECK(ab == ba);
    } else {
      CHECK(ab == ba.negated());
    }
  }
}

TEST_CASE("commutation of four-body X and Z products") {
  auto xxxx = PauliString::parse("X0 X1 X2 X3", 4);
  auto zz = PauliString::parse("Z0 Z1", 4);
  CHECK(commutes(xxxx, zz) == +1);  // even overlap
  CHECK(commutes(PauliString::single(4, 'X', 0),
                 PauliString::single(4, 'Z', 0)) == -1);
}

TEST_CASE("phase bookkeeping matches dense matrix products") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    auto a = oracle::random_pauli(n, rng);
    auto b = oracle::random_pauli(n, rng);
    auto prod = a * b;
    oracle::Mat expected = oracle::pauli_matrix(a) * oracle::pauli_matrix(b);
    CHECK((expected - oracle::pauli_matrix(prod)).norm() ==
          doctest::Approx(0.0).epsilon(1e-12));
    // Adjoint against the dense dagger.
    oracle::Mat dag = oracle::pauli_matrix(a).adjoint();
    CHECK((dag - oracle::pauli_matrix(a.adjoint())).norm() ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("clifford conjugation matches dense U P U^dagger") {
  std::mt19937_64 rng(15);
  const Gate1 gates[] = {Gate1::H, Gate1::S, Gate1::Sdg,
                         Gate1::X, Gate1::Y, Gate1::Z};
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    auto p = oracle::random_pauli(n, rng);
    Gate1 g = gates[rng() % 6];
    int q = static_cast<int>(rng() % n);
    oracle::Mat u = oracle::gate_matrix_on(n, gate1_matrix(g), q);
    oracle::Mat expected = u * oracle::pauli_matrix(p) * u.adjoint();
    CHECK((expected - oracle::pauli_matrix(p.conjugated(g, q))).norm() ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("parse puts Z1 on bit 1") {
  auto p = PauliString::parse("Z1", 4);
  CHECK(p.z_mask() == 0b0010);
  CHECK(p.x_mask() == 0);
  CHECK(p.phase_exp() == 0);
}

TEST_CASE("parse builds the four-body loop operator") {
  auto cs = PauliString::parse("X0 X1 X2 X3", 4);
  CHECK(cs.x_mask() == 0b1111);
  CHECK(cs.z_mask() == 0);
  CHECK(cs.weight() == 4);
}

TEST_CASE("render of X times Z gives -i Y") {
  auto p = PauliString::parse("X1", 4) * PauliString::parse("Z1", 4);
  CHECK(p.render() == "-i Y1");
}

TEST_CASE("parse/render round trip on random strings") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 16);
    auto p = oracle::random_pauli(n, rng);
    CHECK(PauliString::parse(p.render(), n) == p);
  }
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(PauliString::parse("Q1", 4), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("Z9", 4), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("Z-1", 4), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("Z1 Z1", 4), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("Z", 4), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("Z1x", 4), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("", 4), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("Z0", 65), std::invalid_argument);
}

TEST_CASE("size mismatch is rejected") {
  auto a = PauliString::identity(3);
  auto b = PauliString::identity(4);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(commutes(a, b), std::invalid_argument);
}

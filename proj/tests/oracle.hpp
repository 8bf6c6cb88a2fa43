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

// Test-only oracles: explicit 2^n x 2^n matrices for Pauli strings and
// gates, built independently of the mask algebra they check.

#ifndef TORICSIM_TESTS_ORACLE_HPP
#define TORICSIM_TESTS_ORACLE_HPP

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <complex>
#include <random>

#include "toricsim/pauli.hpp"
#include "toricsim/statevector.hpp"

namespace toricsim::oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat site_matrix(char letter) {
  Mat m(2, 2);
  const c64 i{0, 1};
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::logic_error("bad letter");
  }
  return m;
}

inline c64 i_power(int k) {
  switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

/// Dense matrix of a PauliString, in the little-endian convention: the
/// qubit-0 factor is the rightmost Kronecker factor.
inline Mat pauli_matrix(const PauliString& p) {
  Mat m = Mat::Identity(1, 1);
  for (int q = 0; q < p.n_qubits(); ++q) {
    m = Eigen::kroneckerProduct(site_matrix(p.site(q)), m).eval();
  }
  return i_power(p.phase_exp()) * m;
}

inline Mat gate_matrix_on(int n_qubits, const Mat2& u, int qubit) {
  Mat g(2, 2);
  g << u[0], u[1], u[2], u[3];
  Mat m = Mat::Identity(1, 1);
  for (int q = 0; q < n_qubits; ++q) {
    const Mat& factor = (q == qubit) ? g : site_matrix('I');
    m = Eigen::kroneckerProduct(factor, m).eval();
  }
  return m;
}

inline Vec to_eigen(const StateVector& psi) {
  Vec v(static_cast<Eigen::Index>(psi.size()));
  for (std::size_t i = 0; i < psi.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = psi.amplitudes()[i];
  }
  return v;
}

inline PauliString random_pauli(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<int> phase(0, 3);
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  PauliString p = PauliString::identity(n);
  for (int q = 0; q < n; ++q) {
    p = p * PauliString::single(n, letters[letter(rng)], q);
  }
  for (int k = phase(rng); k > 0; --k) {
    p = p * PauliString(n, 0, 0, 1);
  }
  return p;
}

inline PauliString random_hermitian_pauli(int n, std::mt19937_64& rng) {
  PauliString p = random_pauli(n, rng);
  if (p.phase_exp() & 1) p = p * PauliString(n, 0, 0, 1);
  return p;
}

inline StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<c64> amps(std::size_t{1} << n);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = c64{gauss(rng), gauss(rng)};
    norm2 += std::norm(a);
  }
  const double s = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= s;
  StateVector psi(n);
  psi.set_amplitudes(std::move(amps));
  return psi;
}

}  // namespace toricsim::oracle

#endif  // TORICSIM_TESTS_ORACLE_HPP

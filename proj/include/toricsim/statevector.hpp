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

#ifndef TORICSIM_STATEVECTOR_HPP
#define TORICSIM_STATEVECTOR_HPP

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "toricsim/lattice.hpp"
#include "toricsim/pauli.hpp"

namespace toricsim {

using c64 = std::complex<double>;
using Mat2 = std::array<c64, 4>;  // row-major [u00, u01, u10, u11]

Mat2 gate1_matrix(Gate1 g);
/// Eigenbasis rotation for sigma(gamma) = cos(gamma) Y + sin(gamma) X:
/// maps the +1/-1 eigenvectors onto |0>/|1>.
Mat2 xy_measurement_rotation(double gamma);

/// Dense pure-state oracle, little-endian amplitude order, up to 20
/// qubits. A state is written by one owner at a time; copies are cheap
/// enough for snapshotting.
class StateVector {
 public:
  static constexpr int kMaxQubits = 20;

  explicit StateVector(int n_qubits);  // |00...0>

  /// Ground state by the literal product construction: one
  /// (1 + C_s)/sqrt(2) factor per full S plaquette applied to |00...0>.
  static StateVector vacuum_dense(const ToricLattice& lat);

  int n_qubits() const { return n_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const c64> amplitudes() const { return amps_; }
  c64 amplitude(std::size_t basis_index) const { return amps_.at(basis_index); }
  void set_amplitudes(std::vector<c64> amps);  // validates size and norm

  /// Throws std::invalid_argument if u is not unitary within 1e-10.
  void apply_gate(const Mat2& u, int qubit);
  void apply_clifford1(Gate1 g, int qubit);
  void apply_pauli(const PauliString& p);

  double norm() const;
  c64 inner_product(const StateVector& other) const;  // <this|other>
  /// l2 distance including the global phase.
  double distance_to(const StateVector& other) const;

  /// <psi|P|psi> for Hermitian P.
  double expectation(const PauliString& p) const;

  /// <psi|H|psi> with H = -sum of all retained plaquette operators.
  double energy(const ToricLattice& lat) const;

  /// <c_xy(gamma)> for a 4-qubit state, one value per angle.
  std::vector<double> correlation_curve(std::span<const double> gammas) const;

  /// Z-basis outcome probabilities of a 4-qubit state, little-endian
  /// (index 0 = HHHH, 15 = VVVV).
  std::array<double, 16> z_populations() const;

 private:
  int n_ = 0;
  std::vector<c64> amps_;
};

/// Four-qubit GHZ state (|0000> + e^{i phi} |1111>)/sqrt(2).
StateVector ghz_state(double phi);

/// 16x16 density operator for the noisy four-qubit experiment model.
class DensityMatrix4 {
 public:
  static constexpr int kDim = 16;

  DensityMatrix4();  // |0000><0000|
  static DensityMatrix4 from_pure(const StateVector& psi);
  static DensityMatrix4 uniform_mixture();

  c64 element(int row, int col) const;
  void set_element(int row, int col, c64 v);

  double trace_real() const;
  /// Smallest eigenvalue of the Hermitian part; >= -tol means physical.
  double min_eigenvalue() const;

  /// The GHZ coherence rho_{HHHH,VVVV}.
  c64 ghz_coherence() const { return element(0, 15); }
  double fidelity(const StateVector& psi) const;  // <psi|rho|psi>

  std::array<double, 16> z_populations() const;
  std::vector<double> correlation_curve(std::span<const double> gammas) const;
  /// Outcome probabilities for a product measurement of sigma(gamma).
  std::array<double, 16> xy_populations(double gamma) const;

  /// rho -> U^{x4} rho U^{x4,dagger} for a single-qubit matrix applied
  /// to every qubit.
  DensityMatrix4 rotated_all(const Mat2& u) const;

  DensityMatrix4& operator+=(const DensityMatrix4& other);
  DensityMatrix4& operator*=(double s);

 private:
  std::array<c64, kDim * kDim> m_{};
};

}  // namespace toricsim

#endif  // TORICSIM_STATEVECTOR_HPP

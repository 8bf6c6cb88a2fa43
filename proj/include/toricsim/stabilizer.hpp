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

#ifndef TORICSIM_STABILIZER_HPP
#define TORICSIM_STABILIZER_HPP

#include <vector>

#include "toricsim/lattice.hpp"
#include "toricsim/pauli.hpp"

namespace toricsim {

/// Sign-tracked generator tableau: n independent, mutually commuting
/// Hermitian PauliStrings whose joint +1 eigenspace is the state. Global
/// phase is out of model for this backend; protocols that convert a
/// global phase into a generator sign (the interference procedure)
/// remain fully representable.
///
/// Gate set: Pauli strings and single-qubit Cliffords. No entangling
/// gates, no measurement collapse.
class StabilizerState {
 public:
  /// State stabilized by every retained plaquette operator with sign +1.
  /// The minimal instance yields {+XXXX, +ZZ links}.
  static StabilizerState vacuum(const ToricLattice& lat);

  /// |00...0>: generators {+Z_q}.
  static StabilizerState zero_state(int n_qubits);

  int n_qubits() const { return n_; }
  const std::vector<PauliString>& generators() const { return gens_; }
  /// Sign of generator k: its phase_exp() is 0 (+1) or 2 (-1).
  int generator_sign(int k) const;

  /// Conjugates generators in place; a sign flips iff the generator
  /// anticommutes with p.
  void apply_pauli(const PauliString& p);
  void apply_clifford1(Gate1 g, int qubit);

  /// +1/-1 if +/-p is in the stabilizer group, 0 if p anticommutes with
  /// some generator. p must be Hermitian.
  int expectation(const PauliString& p) const;

  /// Z-basis outcome probabilities of a 4-qubit state, assembled from
  /// the 16 Z-subset expectations.
  std::array<double, 16> z_populations() const;

  /// <c_xy(gamma)> for a 4-qubit state, via the 16 X/Y product terms.
  std::vector<double> correlation_curve(std::span<const double> gammas) const;

  /// Checks mutual commutation, independence and Hermitian +/-1 signs;
  /// throws std::logic_error on violation. Used by tests after each step.
  void validate() const;

 private:
  StabilizerState() = default;

  int n_ = 0;
  std::vector<PauliString> gens_;
};

}  // namespace toricsim

#endif  // TORICSIM_STABILIZER_HPP

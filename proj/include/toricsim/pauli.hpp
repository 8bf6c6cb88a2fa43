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

#ifndef TORICSIM_PAULI_HPP
#define TORICSIM_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace toricsim {

/// Single-qubit Clifford gates used throughout the toolkit.
enum class Gate1 { H, S, Sdg, X, Y, Z };

Gate1 gate1_from_name(std::string_view name);
std::string_view gate1_name(Gate1 g);

/// An n-qubit Pauli operator with exact phase tracking.
///
/// Internally the operator is stored as i^k * prod_q X_q^{x_q} Z_q^{z_q}
/// with one bit of x/z per qubit. The public phase convention is relative
/// to the letter form I/X/Y/Z with Y = i*X*Z at each site, so e.g. the
/// product X(0)*Z(0) reports phase_exp() == 3 and renders as "-i Y0".
///
/// Qubit 0 is the lowest-order bit of basis-state labels (little-endian);
/// every module in the toolkit inherits this convention.
///
/// Values are immutable in practice: all mutating operations return new
/// strings, so PauliStrings are freely shareable across workers.
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  PauliString() = default;
  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
              int letter_phase_exp = 0);

  static PauliString identity(int n_qubits);
  /// Single-site operator; `letter` is one of I, X, Y, Z.
  static PauliString single(int n_qubits, char letter, int qubit);

  /// Parses the text format used in scenario files, e.g. "Z1 X3" or
  /// "-i Y0". Site indices are zero-based. Throws std::invalid_argument
  /// on malformed tokens, duplicate sites or out-of-range indices.
  static PauliString parse(std::string_view text, int n_qubits);
  std::string render() const;

  int n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  /// Phase exponent in the letter convention: operator = i^phase_exp *
  /// (tensor product of I/X/Y/Z site letters). Always in {0,1,2,3}.
  int phase_exp() const;
  /// Raw phase exponent of the X^x Z^z normal form.
  int xz_phase_exp() const { return phase_; }

  char site(int qubit) const;
  /// Number of non-identity sites.
  int weight() const;

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const { return (phase_exp() & 1) == 0; }

  PauliString adjoint() const;
  /// Flips the overall sign (multiplies by -1).
  PauliString negated() const;

  /// Conjugation U P U^dagger by a single-qubit Clifford gate.
  PauliString conjugated(Gate1 gate, int qubit) const;

  friend PauliString operator*(const PauliString& a, const PauliString& b);

  bool operator==(const PauliString& other) const = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;  // power of i in the X^x Z^z form
};

/// +1 if ab == ba, -1 if ab == -ba. Any two Paulis satisfy one of the two.
int commutes(const PauliString& a, const PauliString& b);

}  // namespace toricsim

#endif  // TORICSIM_PAULI_HPP

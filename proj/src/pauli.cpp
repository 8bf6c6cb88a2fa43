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

#include "toricsim/pauli.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace toricsim {

namespace {

void check_qubit_count(int n) {
  if (n < 1 || n > PauliString::kMaxQubits) {
    throw std::invalid_argument("PauliString supports 1 to 64 qubits, got " +
                                std::to_string(n));
  }
}

void check_same_size(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("Pauli size mismatch: " +
                                std::to_string(a.n_qubits()) + " vs " +
                                std::to_string(b.n_qubits()));
  }
}

int popcount_parity(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

Gate1 gate1_from_name(std::string_view name) {
  if (name == "H") return Gate1::H;
  if (name == "S") return Gate1::S;
  if (name == "Sdg" || name == "S_inv" || name == "Sdag") return Gate1::Sdg;
  if (name == "X") return Gate1::X;
  if (name == "Y") return Gate1::Y;
  if (name == "Z") return Gate1::Z;
  throw std::invalid_argument("unknown single-qubit gate: " +
                              std::string(name));
}

std::string_view gate1_name(Gate1 g) {
  switch (g) {
    case Gate1::H: return "H";
    case Gate1::S: return "S";
    case Gate1::Sdg: return "Sdg";
    case Gate1::X: return "X";
    case Gate1::Y: return "Y";
    case Gate1::Z: return "Z";
  }
  return "?";
}

PauliString::PauliString(int n_qubits) : n_(n_qubits) {
  check_qubit_count(n_qubits);
}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask, int letter_phase_exp)
    : n_(n_qubits), x_(x_mask), z_(z_mask) {
  check_qubit_count(n_qubits);
  if (n_qubits < 64 && ((x_mask | z_mask) >> n_qubits) != 0) {
    throw std::invalid_argument("Pauli mask has bits beyond qubit count");
  }
  // letter phase -> xz phase: each Y site contributes one factor of i.
  int n_y = std::popcount(x_ & z_);
  phase_ = (letter_phase_exp + n_y) & 3;
}

PauliString PauliString::identity(int n_qubits) {
  return PauliString(n_qubits);
}

PauliString PauliString::single(int n_qubits, char letter, int qubit) {
  check_qubit_count(n_qubits);
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::invalid_argument("qubit index out of range: " +
                                std::to_string(qubit));
  }
  std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (letter) {
    case 'I': return PauliString(n_qubits);
    case 'X': return PauliString(n_qubits, bit, 0);
    case 'Y': return PauliString(n_qubits, bit, bit);
    case 'Z': return PauliString(n_qubits, 0, bit);
    default:
      throw std::invalid_argument(std::string("unknown Pauli letter: ") +
                                  letter);
  }
}

int PauliString::phase_exp() const {
  int n_y = std::popcount(x_ & z_);
  return (phase_ + 3 * n_y) & 3;
}

char PauliString::site(int qubit) const {
  if (qubit < 0 || qubit >= n_) {
    throw std::invalid_argument("qubit index out of range");
  }
  bool x = (x_ >> qubit) & 1;
  bool z = (z_ >> qubit) & 1;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

PauliString PauliString::adjoint() const {
  PauliString r = *this;
  // (i^k M)^dagger = i^{-k} M^dagger and M^dagger = (-1)^{#Y} M.
  int n_y = std::popcount(x_ & z_);
  r.phase_ = (-phase_ + 2 * n_y) & 3;
  return r;
}

PauliString PauliString::negated() const {
  PauliString r = *this;
  r.phase_ = (phase_ + 2) & 3;
  return r;
}

PauliString PauliString::conjugated(Gate1 gate, int qubit) const {
  if (qubit < 0 || qubit >= n_) {
    throw std::invalid_argument("qubit index out of range: " +
                                std::to_string(qubit));
  }
  std::uint64_t bit = std::uint64_t{1} << qubit;
  bool x = x_ & bit;
  bool z = z_ & bit;
  PauliString r = *this;
  switch (gate) {
    case Gate1::H:
      // X <-> Z; the site X^x Z^z picks up (-1)^{xz}.
      if (x && z) r.phase_ = (r.phase_ + 2) & 3;
      if (x != z) {
        r.x_ ^= bit;
        r.z_ ^= bit;
      }
      break;
    case Gate1::S:
      if (x) {
        r.z_ ^= bit;
        r.phase_ = (r.phase_ + 1) & 3;
      }
      break;
    case Gate1::Sdg:
      if (x) {
        r.z_ ^= bit;
        r.phase_ = (r.phase_ + 3) & 3;
      }
      break;
    case Gate1::X:
      if (z) r.phase_ = (r.phase_ + 2) & 3;
      break;
    case Gate1::Y:
      if (x != z) r.phase_ = (r.phase_ + 2) & 3;
      break;
    case Gate1::Z:
      if (x) r.phase_ = (r.phase_ + 2) & 3;
      break;
  }
  return r;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  check_same_size(a, b);
  PauliString r(a.n_);
  r.x_ = a.x_ ^ b.x_;
  r.z_ = a.z_ ^ b.z_;
  // Z^z1 X^x2 = (-1)^{<z1,x2>} X^x2 Z^z1 is the only phase source.
  r.phase_ = (a.phase_ + b.phase_ + 2 * popcount_parity(a.z_ & b.x_)) & 3;
  return r;
}

int commutes(const PauliString& a, const PauliString& b) {
  check_same_size(a, b);
  int form = popcount_parity(a.x_mask() & b.z_mask()) ^
             popcount_parity(a.z_mask() & b.x_mask());
  return form ? -1 : +1;
}

std::string PauliString::render() const {
  static const char* kPhase[4] = {"", "i", "-", "-i"};
  std::ostringstream out;
  int disp = phase_exp();
  bool first = true;
  if (disp != 0) {
    out << kPhase[disp];
    first = false;
  }
  if (is_identity()) {
    out << (first ? "" : " ") << "I";
    return out.str();
  }
  for (int q = 0; q < n_; ++q) {
    char c = site(q);
    if (c == 'I') continue;
    if (!first) out << ' ';
    out << c << q;
    first = false;
  }
  return out.str();
}

PauliString PauliString::parse(std::string_view text, int n_qubits) {
  check_qubit_count(n_qubits);
  std::istringstream in{std::string(text)};
  std::string token;
  std::uint64_t x = 0, z = 0, seen = 0;
  int phase = 0;
  bool first = true;
  bool any_site = false;
  while (in >> token) {
    if (first && (token == "+" || token == "-" || token == "i" ||
                  token == "-i" || token == "+i")) {
      if (token == "-") phase = 2;
      if (token == "i" || token == "+i") phase = 1;
      if (token == "-i") phase = 3;
      first = false;
      continue;
    }
    first = false;
    char letter = token[0];
    if (letter != 'I' && letter != 'X' && letter != 'Y' && letter != 'Z') {
      throw std::invalid_argument("malformed Pauli token: " + token);
    }
    if (token == "I") {  // bare identity, as produced by render()
      any_site = true;
      continue;
    }
    if (token.size() < 2) {
      throw std::invalid_argument("Pauli token missing qubit index: " + token);
    }
    std::size_t pos = 0;
    int qubit;
    try {
      qubit = std::stoi(token.substr(1), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed Pauli token: " + token);
    }
    if (pos != token.size() - 1 || qubit < 0) {
      throw std::invalid_argument("malformed Pauli token: " + token);
    }
    if (qubit >= n_qubits) {
      throw std::invalid_argument("qubit index out of range in token: " +
                                  token);
    }
    std::uint64_t bit = std::uint64_t{1} << qubit;
    if (seen & bit) {
      throw std::invalid_argument("duplicate qubit in Pauli spec: " + token);
    }
    seen |= bit;
    any_site = true;
    if (letter == 'X' || letter == 'Y') x |= bit;
    if (letter == 'Z' || letter == 'Y') z |= bit;
  }
  if (!any_site) {
    throw std::invalid_argument("empty Pauli spec");
  }
  return PauliString(n_qubits, x, z, phase);
}

}  // namespace toricsim

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

#include "toricsim/stabilizer.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace toricsim {

namespace {

// Symplectic row for Gaussian elimination over GF(2).
struct SymplecticRow {
  std::uint64_t x;
  std::uint64_t z;
};

// Reduces `rows` to echelon form in place, tracking combinations in
// `combos` (bitset over original row indices) when provided.
int symplectic_rank(std::vector<SymplecticRow>& rows,
                    std::vector<std::uint64_t>* combos) {
  const int cols = 128;
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size());
       ++col) {
    auto bit_of = [&](const SymplecticRow& r) -> bool {
      return col < 64 ? (r.x >> col) & 1 : (r.z >> (col - 64)) & 1;
    };
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (bit_of(rows[r])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    if (combos) std::swap((*combos)[rank], (*combos)[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r != rank && bit_of(rows[r])) {
        rows[r].x ^= rows[rank].x;
        rows[r].z ^= rows[rank].z;
        if (combos) (*combos)[r] ^= (*combos)[rank];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

StabilizerState StabilizerState::zero_state(int n_qubits) {
  StabilizerState st;
  st.n_ = n_qubits;
  for (int q = 0; q < n_qubits; ++q) {
    st.gens_.push_back(PauliString::single(n_qubits, 'Z', q));
  }
  return st;
}

StabilizerState StabilizerState::vacuum(const ToricLattice& lat) {
  const int n = lat.qubit_count();
  // All plaquette operators generate the group; pick n independent ones.
  std::vector<PauliString> candidates;
  for (int id = 0; id < lat.plaquette_count(); ++id) {
    candidates.push_back(lat.plaquette_operator(id));
  }
  std::vector<SymplecticRow> rows;
  for (const auto& p : candidates) rows.push_back({p.x_mask(), p.z_mask()});

  StabilizerState st;
  st.n_ = n;
  std::vector<SymplecticRow> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::vector<SymplecticRow> trial = kept;
    trial.push_back(rows[i]);
    std::vector<SymplecticRow> scratch = trial;
    if (symplectic_rank(scratch, nullptr) ==
        static_cast<int>(trial.size())) {
      kept = std::move(trial);
      st.gens_.push_back(candidates[i]);
    }
    if (static_cast<int>(st.gens_.size()) == n) break;
  }
  if (static_cast<int>(st.gens_.size()) != n) {
    throw std::logic_error(
        "plaquette operators do not fix a unique vacuum state");
  }
  return st;
}

int StabilizerState::generator_sign(int k) const {
  int disp = gens_.at(k).phase_exp();
  if (disp == 0) return +1;
  if (disp == 2) return -1;
  throw std::logic_error("generator with non-Hermitian phase");
}

void StabilizerState::apply_pauli(const PauliString& p) {
  if (p.n_qubits() != n_) {
    throw std::invalid_argument("Pauli size does not match state");
  }
  for (auto& g : gens_) {
    if (commutes(p, g) < 0) g = g.negated();
  }
}

void StabilizerState::apply_clifford1(Gate1 gate, int qubit) {
  if (qubit < 0 || qubit >= n_) {
    throw std::invalid_argument("qubit index out of range");
  }
  for (auto& g : gens_) g = g.conjugated(gate, qubit);
}

int StabilizerState::expectation(const PauliString& p) const {
  if (p.n_qubits() != n_) {
    throw std::invalid_argument("Pauli size does not match state");
  }
  if (!p.is_hermitian()) {
    throw std::invalid_argument("expectation needs a Hermitian Pauli");
  }
  for (const auto& g : gens_) {
    if (commutes(p, g) < 0) return 0;
  }
  if (p.is_identity()) return p.phase_exp() == 0 ? +1 : -1;
  // Express p's masks as a product of generators, then compare phases.
  std::vector<SymplecticRow> rows;
  std::vector<std::uint64_t> combos;
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    rows.push_back({gens_[k].x_mask(), gens_[k].z_mask()});
    combos.push_back(std::uint64_t{1} << k);
  }
  rows.push_back({p.x_mask(), p.z_mask()});
  combos.push_back(0);
  int rank_with = symplectic_rank(rows, &combos);
  // p commutes with every generator, so with full-rank generators its
  // masks always lie in their span; the appended row reduces to zero.
  std::uint64_t combo = 0;
  bool found = false;
  for (std::size_t r = rank_with; r < rows.size(); ++r) {
    if (rows[r].x == 0 && rows[r].z == 0 && (combos[r] != 0)) {
      combo = combos[r];
      found = true;
      break;
    }
  }
  if (!found) {
    throw std::logic_error("stabilizer tableau lost full rank");
  }
  PauliString prod = PauliString::identity(n_);
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if ((combo >> k) & 1) prod = prod * gens_[k];
  }
  int diff = (p.xz_phase_exp() - prod.xz_phase_exp()) & 3;
  if (diff == 0) return +1;
  if (diff == 2) return -1;
  throw std::logic_error("non-real stabilizer expectation");
}

std::array<double, 16> StabilizerState::z_populations() const {
  if (n_ != 4) {
    throw std::invalid_argument("z_populations requires a 4-qubit state");
  }
  // P(s) = (1/16) sum_{T subset} <prod_{q in T} Z_q> (-1)^{|s & T|}.
  std::array<double, 16> probs{};
  std::array<int, 16> zexp{};
  for (int t = 0; t < 16; ++t) {
    zexp[t] = expectation(PauliString(4, 0, static_cast<std::uint64_t>(t)));
  }
  for (int s = 0; s < 16; ++s) {
    double acc = 0.0;
    for (int t = 0; t < 16; ++t) {
      int sign = (std::popcount(static_cast<unsigned>(s & t)) & 1) ? -1 : 1;
      acc += sign * zexp[t];
    }
    probs[s] = acc / 16.0;
  }
  return probs;
}

std::vector<double> StabilizerState::correlation_curve(
    std::span<const double> gammas) const {
  if (n_ != 4) {
    throw std::invalid_argument(
        "correlation_curve requires a 4-qubit state");
  }
  // c_xy(gamma) expands into the 16 products of X/Y site choices with
  // cos/sin weights; each term is a Pauli expectation.
  std::array<int, 16> term_exp{};
  for (int m = 0; m < 16; ++m) {
    // bit q of m set -> X on qubit q (sin weight), else Y (cos weight).
    std::uint64_t x = 0xF;  // both X and Y have the x bit set
    std::uint64_t z = static_cast<std::uint64_t>(~m) & 0xF;
    term_exp[m] = expectation(PauliString(4, x, z));
  }
  std::vector<double> values;
  values.reserve(gammas.size());
  for (double gamma : gammas) {
    const double cg = std::cos(gamma), sg = std::sin(gamma);
    double acc = 0.0;
    for (int m = 0; m < 16; ++m) {
      if (term_exp[m] == 0) continue;
      double w = 1.0;
      for (int q = 0; q < 4; ++q) {
        w *= ((m >> q) & 1) ? sg : cg;
      }
      acc += w * term_exp[m];
    }
    values.push_back(acc);
  }
  return values;
}

void StabilizerState::validate() const {
  if (static_cast<int>(gens_.size()) != n_) {
    throw std::logic_error("generator count does not match qubit count");
  }
  for (std::size_t a = 0; a < gens_.size(); ++a) {
    if (!gens_[a].is_hermitian()) {
      throw std::logic_error("non-Hermitian generator");
    }
    (void)generator_sign(static_cast<int>(a));
    for (std::size_t b = a + 1; b < gens_.size(); ++b) {
      if (commutes(gens_[a], gens_[b]) < 0) {
        throw std::logic_error("generators do not commute");
      }
    }
  }
  std::vector<SymplecticRow> rows;
  for (const auto& g : gens_) rows.push_back({g.x_mask(), g.z_mask()});
  if (symplectic_rank(rows, nullptr) != n_) {
    throw std::logic_error("generators are not independent");
  }
}

}  // namespace toricsim

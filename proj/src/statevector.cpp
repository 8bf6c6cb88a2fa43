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

#include "toricsim/statevector.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "toricsim/kernels.hpp"

namespace toricsim {

namespace {

constexpr double kUnitaryTol = 1e-10;

bool is_unitary(const Mat2& u) {
  // U U^dagger == I entrywise.
  const c64 r00 = u[0] * std::conj(u[0]) + u[1] * std::conj(u[1]);
  const c64 r01 = u[0] * std::conj(u[2]) + u[1] * std::conj(u[3]);
  const c64 r11 = u[2] * std::conj(u[2]) + u[3] * std::conj(u[3]);
  return std::abs(r00 - c64{1.0, 0.0}) < kUnitaryTol &&
         std::abs(r01) < kUnitaryTol &&
         std::abs(r11 - c64{1.0, 0.0}) < kUnitaryTol;
}

void check_four_qubits(int n, const char* what) {
  if (n != 4) {
    throw std::invalid_argument(std::string(what) +
                                " requires a 4-qubit state");
  }
}

}  // namespace

Mat2 gate1_matrix(Gate1 g) {
  const double s = 1.0 / std::numbers::sqrt2;
  switch (g) {
    case Gate1::H: return {c64{s, 0}, c64{s, 0}, c64{s, 0}, c64{-s, 0}};
    case Gate1::S: return {c64{1, 0}, c64{0, 0}, c64{0, 0}, c64{0, 1}};
    case Gate1::Sdg: return {c64{1, 0}, c64{0, 0}, c64{0, 0}, c64{0, -1}};
    case Gate1::X: return {c64{0, 0}, c64{1, 0}, c64{1, 0}, c64{0, 0}};
    case Gate1::Y: return {c64{0, 0}, c64{0, -1}, c64{0, 1}, c64{0, 0}};
    case Gate1::Z: return {c64{1, 0}, c64{0, 0}, c64{0, 0}, c64{-1, 0}};
  }
  throw std::logic_error("unreachable");
}

Mat2 xy_measurement_rotation(double gamma) {
  // sigma(gamma) eigenvectors: |+> = (|0> + i e^{-i gamma}|1>)/sqrt(2),
  // |-> = (|0> - i e^{-i gamma}|1>)/sqrt(2). Rows are their conjugates.
  const double s = 1.0 / std::numbers::sqrt2;
  const c64 phase = c64{0, -1} * std::exp(c64{0, gamma});  // -i e^{i gamma}
  return {c64{s, 0}, s * phase, c64{s, 0}, -s * phase};
}

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("StateVector supports 1 to 20 qubits");
  }
  amps_.assign(std::size_t{1} << n_qubits, c64{0, 0});
  amps_[0] = c64{1, 0};
}

StateVector StateVector::vacuum_dense(const ToricLattice& lat) {
  if (lat.qubit_count() > kMaxQubits) {
    throw std::invalid_argument("lattice too large for the dense engine");
  }
  StateVector psi(lat.qubit_count());
  const double s = 1.0 / std::numbers::sqrt2;
  std::vector<c64> tmp;
  for (int id = 0; id < lat.plaquette_count(); ++id) {
    const Plaquette& p = lat.plaquette(id);
    if (p.kind != PlaquetteKind::S) continue;
    PauliString cs = lat.plaquette_operator(id);
    tmp = psi.amps_;
    kernels::active_ops().apply_pauli(tmp.data(), tmp.size(), cs.x_mask(),
                                      cs.z_mask(), cs.xz_phase_exp());
    kernels::active_ops().axpy(psi.amps_.data(), tmp.data(), c64{1, 0},
                               psi.amps_.size());
    kernels::active_ops().scale(psi.amps_.data(), c64{s, 0},
                                psi.amps_.size());
  }
  return psi;
}

void StateVector::set_amplitudes(std::vector<c64> amps) {
  if (amps.size() != amps_.size()) {
    throw std::invalid_argument("amplitude count mismatch");
  }
  amps_ = std::move(amps);
  if (std::abs(norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("amplitudes are not normalized");
  }
}

void StateVector::apply_gate(const Mat2& u, int qubit) {
  if (qubit < 0 || qubit >= n_) {
    throw std::invalid_argument("qubit index out of range");
  }
  if (!is_unitary(u)) {
    throw std::invalid_argument("non-unitary single-qubit matrix");
  }
  kernels::active_ops().apply_gate1(amps_.data(), amps_.size(), qubit,
                                    u.data());
}

void StateVector::apply_clifford1(Gate1 g, int qubit) {
  apply_gate(gate1_matrix(g), qubit);
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.n_qubits() != n_) {
    throw std::invalid_argument("Pauli size does not match state");
  }
  kernels::active_ops().apply_pauli(amps_.data(), amps_.size(), p.x_mask(),
                                    p.z_mask(), p.xz_phase_exp());
}

double StateVector::norm() const {
  c64 ip = kernels::active_ops().inner_product(amps_.data(), amps_.data(),
                                               amps_.size());
  return std::sqrt(ip.real());
}

c64 StateVector::inner_product(const StateVector& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("state size mismatch");
  }
  return kernels::active_ops().inner_product(amps_.data(),
                                             other.amps_.data(),
                                             amps_.size());
}

double StateVector::distance_to(const StateVector& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("state size mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    acc += std::norm(amps_[i] - other.amps_[i]);
  }
  return std::sqrt(acc);
}

double StateVector::expectation(const PauliString& p) const {
  if (p.n_qubits() != n_) {
    throw std::invalid_argument("Pauli size does not match state");
  }
  if (!p.is_hermitian()) {
    throw std::invalid_argument("expectation needs a Hermitian Pauli");
  }
  std::vector<c64> tmp = amps_;
  kernels::active_ops().apply_pauli(tmp.data(), tmp.size(), p.x_mask(),
                                    p.z_mask(), p.xz_phase_exp());
  c64 val = kernels::active_ops().inner_product(amps_.data(), tmp.data(),
                                                amps_.size());
  return val.real();
}

double StateVector::energy(const ToricLattice& lat) const {
  if (lat.qubit_count() != n_) {
    throw std::invalid_argument("lattice size does not match state");
  }
  double e = 0.0;
  for (int id = 0; id < lat.plaquette_count(); ++id) {
    e -= expectation(lat.plaquette_operator(id));
  }
  return e;
}

std::vector<double> StateVector::correlation_curve(
    std::span<const double> gammas) const {
  check_four_qubits(n_, "correlation_curve");
  std::vector<double> values;
  values.reserve(gammas.size());
  for (double gamma : gammas) {
    StateVector rotated = *this;
    const Mat2 u = xy_measurement_rotation(gamma);
    for (int q = 0; q < 4; ++q) rotated.apply_gate(u, q);
    double c = 0.0;
    for (std::size_t b = 0; b < rotated.amps_.size(); ++b) {
      const double p = std::norm(rotated.amps_[b]);
      c += (std::popcount(b) & 1) ? -p : p;
    }
    values.push_back(c);
  }
  return values;
}

std::array<double, 16> StateVector::z_populations() const {
  check_four_qubits(n_, "z_populations");
  std::array<double, 16> probs{};
  for (std::size_t b = 0; b < amps_.size(); ++b) {
    probs[b] = std::norm(amps_[b]);
  }
  return probs;
}

StateVector ghz_state(double phi) {
  StateVector psi(4);
  std::vector<c64> amps(16, c64{0, 0});
  const double s = 1.0 / std::numbers::sqrt2;
  amps[0] = c64{s, 0};
  amps[15] = s * std::exp(c64{0, phi});
  psi.set_amplitudes(std::move(amps));
  return psi;
}

DensityMatrix4::DensityMatrix4() { m_[0] = c64{1, 0}; }

DensityMatrix4 DensityMatrix4::from_pure(const StateVector& psi) {
  check_four_qubits(psi.n_qubits(), "DensityMatrix4");
  DensityMatrix4 rho;
  auto amps = psi.amplitudes();
  for (int r = 0; r < kDim; ++r) {
    for (int c = 0; c < kDim; ++c) {
      rho.m_[r * kDim + c] = amps[r] * std::conj(amps[c]);
    }
  }
  return rho;
}

DensityMatrix4 DensityMatrix4::uniform_mixture() {
  DensityMatrix4 rho;
  rho.m_.fill(c64{0, 0});
  for (int r = 0; r < kDim; ++r) rho.m_[r * kDim + r] = c64{1.0 / 16, 0};
  return rho;
}

c64 DensityMatrix4::element(int row, int col) const {
  return m_.at(row * kDim + col);
}

void DensityMatrix4::set_element(int row, int col, c64 v) {
  m_.at(row * kDim + col) = v;
}

double DensityMatrix4::trace_real() const {
  double t = 0.0;
  for (int r = 0; r < kDim; ++r) t += m_[r * kDim + r].real();
  return t;
}

double DensityMatrix4::min_eigenvalue() const {
  Eigen::Matrix<c64, kDim, kDim> m;
  for (int r = 0; r < kDim; ++r) {
    for (int c = 0; c < kDim; ++c) m(r, c) = m_[r * kDim + c];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<c64, kDim, kDim>> solver(m);
  return solver.eigenvalues().minCoeff();
}

double DensityMatrix4::fidelity(const StateVector& psi) const {
  check_four_qubits(psi.n_qubits(), "fidelity");
  auto amps = psi.amplitudes();
  c64 val{0, 0};
  for (int r = 0; r < kDim; ++r) {
    for (int c = 0; c < kDim; ++c) {
      val += std::conj(amps[r]) * m_[r * kDim + c] * amps[c];
    }
  }
  return val.real();
}

std::array<double, 16> DensityMatrix4::z_populations() const {
  std::array<double, 16> probs{};
  for (int r = 0; r < kDim; ++r) probs[r] = m_[r * kDim + r].real();
  return probs;
}

DensityMatrix4 DensityMatrix4::rotated_all(const Mat2& u) const {
  // Full 16x16 product operator: U_{ij} = prod_q u[bit_q(i)][bit_q(j)].
  std::array<c64, kDim * kDim> big;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      c64 v{1, 0};
      for (int q = 0; q < 4; ++q) {
        v *= u[((i >> q) & 1) * 2 + ((j >> q) & 1)];
      }
      big[i * kDim + j] = v;
    }
  }
  DensityMatrix4 out;
  out.m_.fill(c64{0, 0});
  std::array<c64, kDim * kDim> t{};  // big * rho
  for (int i = 0; i < kDim; ++i) {
    for (int k = 0; k < kDim; ++k) {
      const c64 b = big[i * kDim + k];
      if (b == c64{0, 0}) continue;
      for (int j = 0; j < kDim; ++j) {
        t[i * kDim + j] += b * m_[k * kDim + j];
      }
    }
  }
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      c64 acc{0, 0};
      for (int k = 0; k < kDim; ++k) {
        acc += t[i * kDim + k] * std::conj(big[j * kDim + k]);
      }
      out.m_[i * kDim + j] = acc;
    }
  }
  return out;
}

std::array<double, 16> DensityMatrix4::xy_populations(double gamma) const {
  DensityMatrix4 rotated = rotated_all(xy_measurement_rotation(gamma));
  return rotated.z_populations();
}

std::vector<double> DensityMatrix4::correlation_curve(
    std::span<const double> gammas) const {
  std::vector<double> values;
  values.reserve(gammas.size());
  for (double gamma : gammas) {
    auto probs = xy_populations(gamma);
    double c = 0.0;
    for (int b = 0; b < kDim; ++b) {
      c += (std::popcount(static_cast<unsigned>(b)) & 1) ? -probs[b]
                                                         : probs[b];
    }
    values.push_back(c);
  }
  return values;
}

DensityMatrix4& DensityMatrix4::operator+=(const DensityMatrix4& other) {
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += other.m_[i];
  return *this;
}

DensityMatrix4& DensityMatrix4::operator*=(double s) {
  for (auto& v : m_) v *= s;
  return *this;
}

}  // namespace toricsim

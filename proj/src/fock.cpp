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

#include "toricsim/fock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace toricsim {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double sqrt_occ_factorial(const OccVec& occ) {
  double f = 1.0;
  for (int n : occ) f *= factorial(n);
  return std::sqrt(f);
}

// Monomial in creation operators: prod_m (a_m^dag)^{e_m} with a complex
// coefficient. A normalized ket |occ> equals (1/sqrt(occ!)) times the
// matching monomial applied to vacuum.
using Monomials = std::map<OccVec, c64>;

void add_monomial(Monomials& dst, const OccVec& exps, c64 coeff) {
  auto [it, inserted] = dst.try_emplace(exps, coeff);
  if (!inserted) it->second += coeff;
}

// Substitutes a_m^dag -> sum_k U[k][m] b_k^dag into every monomial.
Monomials substitute(const Monomials& src,
                     const std::array<std::array<c64, kModeCount>,
                                      kModeCount>& u) {
  Monomials out;
  for (const auto& [exps, coeff] : src) {
    Monomials acc;
    add_monomial(acc, OccVec{}, coeff);
    for (int m = 0; m < kModeCount; ++m) {
      for (int rep = 0; rep < exps[m]; ++rep) {
        Monomials next;
        for (const auto& [e, c] : acc) {
          for (int k = 0; k < kModeCount; ++k) {
            if (u[k][m] == c64{0, 0}) continue;
            OccVec e2 = e;
            ++e2[k];
            add_monomial(next, e2, c * u[k][m]);
          }
        }
        acc = std::move(next);
      }
    }
    for (const auto& [e, c] : acc) add_monomial(out, e, c);
  }
  return out;
}

Monomials state_to_monomials(const std::map<OccVec, c64>& amps) {
  Monomials m;
  for (const auto& [occ, amp] : amps) {
    add_monomial(m, occ, amp / sqrt_occ_factorial(occ));
  }
  return m;
}

std::map<OccVec, c64> monomials_to_state(const Monomials& m) {
  std::map<OccVec, c64> amps;
  for (const auto& [occ, coeff] : m) {
    if (coeff == c64{0, 0}) continue;
    amps[occ] = coeff * sqrt_occ_factorial(occ);
  }
  return amps;
}

}  // namespace

Spatial spatial_from_name(std::string_view name) {
  if (name == "a") return Spatial::a;
  if (name == "b") return Spatial::b;
  if (name == "1") return Spatial::m1;
  if (name == "2") return Spatial::m2;
  if (name == "3") return Spatial::m3;
  if (name == "4") return Spatial::m4;
  throw std::invalid_argument("unknown spatial mode: " + std::string(name));
}

std::string_view spatial_name(Spatial s) {
  switch (s) {
    case Spatial::a: return "a";
    case Spatial::b: return "b";
    case Spatial::m1: return "1";
    case Spatial::m2: return "2";
    case Spatial::m3: return "3";
    case Spatial::m4: return "4";
  }
  return "?";
}

int total_photons(const OccVec& occ) {
  int t = 0;
  for (int n : occ) t += n;
  return t;
}

Element Element::make_hwp(Spatial mode, double angle_deg) {
  Element e;
  e.kind = Kind::HWP;
  e.hwp = {mode, angle_deg};
  return e;
}

Element Element::make_pbs(Spatial in1, Spatial in2, Spatial out1,
                          Spatial out2) {
  Element e;
  e.kind = Kind::PBS;
  e.pbs = {in1, in2, out1, out2};
  return e;
}

Element Element::make_bs(Spatial in1, Spatial in2, Spatial out1,
                         Spatial out2) {
  Element e;
  e.kind = Kind::BS;
  e.bs = {in1, in2, out1, out2};
  return e;
}

std::array<std::array<c64, kModeCount>, kModeCount> Element::mode_matrix()
    const {
  std::array<std::array<c64, kModeCount>, kModeCount> u{};
  for (int m = 0; m < kModeCount; ++m) u[m][m] = c64{1, 0};
  const c64 r{0, 1};  // reflection factor
  switch (kind) {
    case Kind::HWP: {
      const double t = 2.0 * hwp.angle_deg * kPi / 180.0;
      const int h = mode_index(hwp.mode, Pol::H);
      const int v = mode_index(hwp.mode, Pol::V);
      u[h][h] = std::cos(t);
      u[v][h] = std::sin(t);
      u[h][v] = std::sin(t);
      u[v][v] = -std::cos(t);
      break;
    }
    case Kind::PBS: {
      const int i1h = mode_index(pbs.in1, Pol::H);
      const int i1v = mode_index(pbs.in1, Pol::V);
      const int i2h = mode_index(pbs.in2, Pol::H);
      const int i2v = mode_index(pbs.in2, Pol::V);
      const int o1h = mode_index(pbs.out1, Pol::H);
      const int o1v = mode_index(pbs.out1, Pol::V);
      const int o2h = mode_index(pbs.out2, Pol::H);
      const int o2v = mode_index(pbs.out2, Pol::V);
      for (auto& row : u) row.fill(c64{0, 0});
      for (int m = 0; m < kModeCount; ++m) {
        if (m != i1h && m != i1v && m != i2h && m != i2v) u[m][m] = {1, 0};
      }
      u[o1h][i1h] = {1, 0};  // H transmitted
      u[o2h][i2h] = {1, 0};
      u[o2v][i1v] = r;  // V reflected
      u[o1v][i2v] = r;
      break;
    }
    case Kind::BS: {
      const double s = 1.0 / std::numbers::sqrt2;
      for (auto& row : u) row.fill(c64{0, 0});
      int ins[2] = {static_cast<int>(bs.in1), static_cast<int>(bs.in2)};
      int outs[2] = {static_cast<int>(bs.out1), static_cast<int>(bs.out2)};
      std::array<bool, kModeCount> touched{};
      for (Pol p : {Pol::H, Pol::V}) {
        for (int side = 0; side < 2; ++side) {
          int in = ins[side] * 2 + static_cast<int>(p);
          int t_out = outs[side] * 2 + static_cast<int>(p);
          int r_out = outs[1 - side] * 2 + static_cast<int>(p);
          u[t_out][in] = c64{s, 0};
          u[r_out][in] = r * s;
          touched[in] = true;
        }
      }
      for (int m = 0; m < kModeCount; ++m) {
        if (!touched[m]) u[m][m] = {1, 0};
      }
      break;
    }
  }
  return u;
}

FockState FockState::spdc_second_order(SpdcWeighting weighting) {
  FockState st;
  if (weighting == SpdcWeighting::as_written) {
    const double amp = 1.0 / std::sqrt(3.0);
    OccVec occ{};
    occ[mode_index(Spatial::a, Pol::H)] = 2;
    occ[mode_index(Spatial::b, Pol::V)] = 2;
    st.add(occ, amp);
    occ = OccVec{};
    occ[mode_index(Spatial::a, Pol::V)] = 2;
    occ[mode_index(Spatial::b, Pol::H)] = 2;
    st.add(occ, amp);
    occ = OccVec{};
    occ[mode_index(Spatial::a, Pol::H)] = 1;
    occ[mode_index(Spatial::a, Pol::V)] = 1;
    occ[mode_index(Spatial::b, Pol::H)] = 1;
    occ[mode_index(Spatial::b, Pol::V)] = 1;
    st.add(occ, amp);
    return st;
  }
  // (a_H^dag b_V^dag + a_V^dag b_H^dag)^2 |0>, expanded term by term.
  Monomials emission;
  OccVec x{};  // a_H b_V
  ++x[mode_index(Spatial::a, Pol::H)];
  ++x[mode_index(Spatial::b, Pol::V)];
  OccVec y{};  // a_V b_H
  ++y[mode_index(Spatial::a, Pol::V)];
  ++y[mode_index(Spatial::b, Pol::H)];
  auto multiply = [](const OccVec& p, const OccVec& q) {
    OccVec out{};
    for (int m = 0; m < kModeCount; ++m) {
      out[m] = static_cast<std::uint8_t>(p[m] + q[m]);
    }
    return out;
  };
  for (const OccVec& first : {x, y}) {
    for (const OccVec& second : {x, y}) {
      add_monomial(emission, multiply(first, second), c64{1, 0});
    }
  }
  for (const auto& [occ, coeff] : monomials_to_state(emission)) {
    st.add(occ, coeff);
  }
  st.normalize();
  return st;
}

double FockState::norm() const {
  double acc = 0.0;
  for (const auto& [occ, amp] : amps_) acc += std::norm(amp);
  return std::sqrt(acc);
}

c64 FockState::amplitude(const OccVec& occ) const {
  auto it = amps_.find(occ);
  return it == amps_.end() ? c64{0, 0} : it->second;
}

void FockState::add(const OccVec& occ, c64 amp) {
  auto [it, inserted] = amps_.try_emplace(occ, amp);
  if (!inserted) it->second += amp;
  if (it->second == c64{0, 0}) amps_.erase(it);
}

void FockState::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::logic_error("cannot normalize the zero state");
  for (auto& [occ, amp] : amps_) amp /= n;
}

FockState FockState::applied(const Element& e) const {
  FockState out;
  out.amps_ = monomials_to_state(
      substitute(state_to_monomials(amps_), e.mode_matrix()));
  return out;
}

PostselectResult postselect_one_per_mode(const FockState& st) {
  PostselectResult result;
  std::vector<c64> amps(16, c64{0, 0});
  for (const auto& [occ, amp] : st.branches()) {
    int index = 0;
    bool keep = occ[mode_index(Spatial::a, Pol::H)] == 0 &&
                occ[mode_index(Spatial::a, Pol::V)] == 0 &&
                occ[mode_index(Spatial::b, Pol::H)] == 0 &&
                occ[mode_index(Spatial::b, Pol::V)] == 0;
    for (int k = 0; keep && k < 4; ++k) {
      Spatial mode = static_cast<Spatial>(static_cast<int>(Spatial::m1) + k);
      int h = occ[mode_index(mode, Pol::H)];
      int v = occ[mode_index(mode, Pol::V)];
      if (h + v != 1) {
        keep = false;
        break;
      }
      if (v == 1) index |= 1 << k;
    }
    if (keep) {
      amps[index] += amp;
      result.success_probability += std::norm(amp);
    }
  }
  if (result.success_probability <= 0.0) {
    return result;
  }
  const double scale = 1.0 / std::sqrt(result.success_probability);
  for (auto& a : amps) a *= scale;
  StateVector psi(4);
  psi.set_amplitudes(std::move(amps));
  result.state = std::move(psi);
  return result;
}

std::vector<Element> ghz_source_chain() {
  return {
      Element::make_hwp(Spatial::b, 22.5),
      Element::make_pbs(Spatial::a, Spatial::b, Spatial::a, Spatial::b),
      Element::make_bs(Spatial::a, Spatial::m2, Spatial::m1, Spatial::m2),
      Element::make_bs(Spatial::b, Spatial::m4, Spatial::m3, Spatial::m4),
  };
}

}  // namespace toricsim

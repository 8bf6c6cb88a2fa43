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

#ifndef TORICSIM_FOCK_HPP
#define TORICSIM_FOCK_HPP

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "toricsim/statevector.hpp"

namespace toricsim {

/// Spatial modes of the source network: SPDC emission modes a, b and the
/// four detected output modes 1..4.
enum class Spatial { a, b, m1, m2, m3, m4 };
constexpr int kSpatialCount = 6;

Spatial spatial_from_name(std::string_view name);
std::string_view spatial_name(Spatial s);

enum class Pol { H, V };

/// One optical mode = (spatial, polarization); 12 modes total, indexed
/// spatial-major so (a,H)=0, (a,V)=1, (b,H)=2, ...
constexpr int kModeCount = 2 * kSpatialCount;
constexpr int mode_index(Spatial s, Pol p) {
  return static_cast<int>(s) * 2 + static_cast<int>(p);
}

/// Photon count per mode; the source stage carries 4 photons total.
using OccVec = std::array<std::uint8_t, kModeCount>;

int total_photons(const OccVec& occ);

/// Optical elements of the source network. Conventions: an HWP at
/// angle theta maps H -> cos(2 theta) H + sin(2 theta) V and
/// V -> sin(2 theta) H - cos(2 theta) V (22.5 degrees gives H -> +,
/// V -> -). The PBS transmits H and reflects V with a factor i; the BS
/// is symmetric 50:50 with a factor i on reflection.
struct Hwp {
  Spatial mode;
  double angle_deg = 22.5;
};
struct Pbs {
  Spatial in1, in2, out1, out2;
};
struct Bs {
  Spatial in1, in2, out1, out2;
};

struct Element {
  enum class Kind { HWP, PBS, BS } kind;
  Hwp hwp{};
  Pbs pbs{};
  Bs bs{};

  static Element make_hwp(Spatial mode, double angle_deg);
  static Element make_pbs(Spatial in1, Spatial in2, Spatial out1,
                          Spatial out2);
  static Element make_bs(Spatial in1, Spatial in2, Spatial out1,
                         Spatial out2);
  /// The 12x12 creation-operator matrix: a_m^dag -> sum_k U[k][m] b_k^dag.
  std::array<std::array<c64, kModeCount>, kModeCount> mode_matrix() const;
};

enum class SpdcWeighting {
  /// The three branches with equal coefficients, as written.
  as_written,
  /// Coefficients from expanding (a_H^dag b_V^dag + a_V^dag b_H^dag)^2
  /// symbolically. The expansion reproduces the equal weights.
  bosonic,
};

/// Occupation-number superposition over the 12 labeled modes.
class FockState {
 public:
  FockState() = default;

  /// Second-order SPDC emission into modes a and b.
  static FockState spdc_second_order(
      SpdcWeighting weighting = SpdcWeighting::as_written);

  const std::map<OccVec, c64>& branches() const { return amps_; }
  std::size_t branch_count() const { return amps_.size(); }
  double norm() const;
  c64 amplitude(const OccVec& occ) const;
  void add(const OccVec& occ, c64 amp);
  void normalize();

  /// Applies one optical element exactly, with bosonic normalization.
  FockState applied(const Element& e) const;

 private:
  std::map<OccVec, c64> amps_;
};

struct PostselectResult {
  /// Absent when no branch has one photon per output mode.
  std::optional<StateVector> state;
  double success_probability = 0.0;
};

/// Projects onto one photon in each of modes 1..4, renormalizes and maps
/// polarization to a qubit (H -> 0, V -> 1; mode k -> qubit k-1).
PostselectResult postselect_one_per_mode(const FockState& st);

/// The full source network: SPDC, HWP in mode b, PBS overlap, and the
/// two splitting BSs feeding modes 1..4.
std::vector<Element> ghz_source_chain();

}  // namespace toricsim

#endif  // TORICSIM_FOCK_HPP
